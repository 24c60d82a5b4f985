#pragma once

#include <span>
#include <string_view>

namespace trisect {

/// Built-in documents, stored as DSL source so they double as format
/// documentation and parser fixtures.
struct BuiltinExample {
  std::string_view name;
  std::string_view title;
  std::string_view source;
};

std::span<const BuiltinExample> builtin_examples();
const BuiltinExample* find_builtin(std::string_view name);

}  // namespace trisect
