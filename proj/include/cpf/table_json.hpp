#pragma once

#include <string>
#include <string_view>

#include "cpf/residue.hpp"
#include "json.hpp"

namespace cpf {

// {"q":2,"f":"t^2","g":"t^2","values":{"0":"0","1":"1","t":"t","t+1":"t+1"}}
// Keys appear in index order of the domain representatives.
nlohmann::ordered_json table_to_json(const FunctionTable& sigma);
std::string table_to_json_text(const FunctionTable& sigma);

// Throws ParseError for malformed documents and DomainError for tables that
// are not total, not reduced, or declare a different q.
FunctionTable table_from_json(const FieldPtr& field, const nlohmann::json& doc);
FunctionTable table_from_json_text(const FieldPtr& field, std::string_view text);

}  // namespace cpf
