#pragma once

#include <doctest.h>

#include <functional>
#include <optional>

#include "adj2/fixtures.hpp"

namespace testing {

/// Fault raised by `f`, or nullopt when it returns normally.
inline std::optional<adj2::Fault> fault_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const adj2::LawError& e) {
    return e.kind();
  }
  return std::nullopt;
}

inline adj2::Workspace& builtin() {
  static adj2::Workspace ws = [] {
    adj2::Workspace w;
    adj2::add_builtin_fixtures(w);
    return w;
  }();
  return ws;
}

}  // namespace testing

#define CHECK_FAULT(expr, fault) CHECK(testing::fault_of([&] { (void)(expr); }) == std::optional<adj2::Fault>(fault))

namespace testing {

/// One object with identity 1 and an idempotent e; the smallest non-thin category used here.
inline adj2::CatPtr idempotent_monoid() {
  adj2::CategoryDescription d;
  d.name = "Idem";
  d.objects = {"*"};
  d.morphisms = {{"1", "*", "*"}, {"e", "*", "*"}};
  d.identities = {{"*", "1"}};
  d.composites = {{"1", "1", "1"}, {"1", "e", "e"}, {"e", "1", "e"}, {"e", "e", "e"}};
  return adj2::validate_category(d);
}

}  // namespace testing
