#pragma once
#include <random>
#include <string>

#include "leg/error.hpp"
#include "leg/fixtures.hpp"

namespace testsupport {

template <class F>
std::string code_of(F&& f) {
  try {
    f();
  } catch (const leg::Error& e) {
    return e.code();
  }
  return "";
}

using leg::random_word;

}  // namespace testsupport
