#pragma once

#include <doctest.h>

#include "slodowy/error.hpp"

namespace slodowy {

/// Runs f, which must throw a library Error, and reports its kind.
template <typename F>
ErrorKind error_kind(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::InternalInconsistency;
}

} // namespace slodowy
