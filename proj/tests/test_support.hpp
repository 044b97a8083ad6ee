#pragma once

#include <doctest.h>

#include "linwave/common.hpp"

// Runs `expr` and checks it throws linwave::Error with `code`.
#define CHECK_ERROR_CODE(expr, expected_code)                   \
  do {                                                 \
    bool thrown_ = false;                              \
    try {                                              \
      (void)(expr);                                    \
    } catch (const linwave::Error& e_) {               \
      thrown_ = true;                                  \
      CHECK(e_.code() == (expected_code));                      \
    }                                                  \
    CHECK_MESSAGE(thrown_, "expected linwave::Error"); \
  } while (0)
