#pragma once

#include <stdexcept>
#include <string_view>

#include <json.hpp>

#include "psl/ast.hpp"
#include "psl/diagnostic.hpp"

namespace psl
{

using Json = nlohmann::json;

inline constexpr int schema_version = 1;

/// Raised when a JSON document does not follow the AST schema in docs/json-schema.md.
class JsonSchemaError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

[[nodiscard]] std::string_view json_name(Profile p);
[[nodiscard]] std::string_view json_name(Anchor a);

[[nodiscard]] Json to_json(const SubjectSpec & s);
[[nodiscard]] Json to_json(const Composition & c);
[[nodiscard]] Json to_json(const ScreenEvent & e);
[[nodiscard]] Json to_json(const Shot & s);
/// Includes the top-level "psl_schema" field.
[[nodiscard]] Json to_json(const Storyboard & sb);
[[nodiscard]] Json to_json(const Diagnostic & d);

[[nodiscard]] Composition composition_from_json(const Json & j);
[[nodiscard]] Storyboard storyboard_from_json(const Json & j);

}  // namespace psl
