#pragma once

#include <string>

#include "doctest.h"
#include "edim/errors.hpp"

// Runs fn, which must throw a domain error, and hands back its code.
template <typename Fn>
inline edim::errc error_code_of(Fn&& fn) {
  try {
    fn();
  } catch (const edim::error& e) {
    return e.code();
  }
  FAIL("expected a domain error");
  return edim::errc::bad_params;
}

template <typename Fn>
inline std::string error_message_of(Fn&& fn) {
  try {
    fn();
  } catch (const edim::error& e) {
    return e.what();
  }
  FAIL("expected a domain error");
  return "";
}
