#include "cpf/table_json.hpp"

#include <optional>
#include <vector>

#include "cpf/errors.hpp"

namespace cpf {

nlohmann::ordered_json table_to_json(const FunctionTable& sigma) {
  nlohmann::ordered_json doc;
  doc["q"] = sigma.domain().field()->q();
  doc["f"] = sigma.domain().modulus().to_string();
  doc["g"] = sigma.codomain().modulus().to_string();
  nlohmann::ordered_json values = nlohmann::ordered_json::object();
  const auto reps = sigma.domain().elements();
  for (std::size_t i = 0; i < reps.size(); ++i) values[reps[i].to_string()] = sigma.at(i).to_string();
  doc["values"] = std::move(values);
  return doc;
}

std::string table_to_json_text(const FunctionTable& sigma) { return table_to_json(sigma).dump(); }

FunctionTable table_from_json(const FieldPtr& field, const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("function table must be a JSON object");
  for (const char* key : {"q", "f", "g", "values"}) {
    if (!doc.contains(key)) throw ParseError(std::string("function table is missing \"") + key + "\"");
  }
  if (!doc["q"].is_number_unsigned() || doc["q"].get<unsigned>() != field->q()) {
    throw DomainError("function table declares q = " + doc["q"].dump() + " but the field has q = " +
                      std::to_string(field->q()));
  }
  if (!doc["f"].is_string() || !doc["g"].is_string() || !doc["values"].is_object()) {
    throw ParseError("function table fields have the wrong JSON types");
  }
  auto domain = make_ring(parse_poly(field, doc["f"].get<std::string>()));
  auto codomain = make_ring(parse_poly(field, doc["g"].get<std::string>()));

  std::vector<std::optional<Poly>> slots(domain->size());
  for (const auto& [key, value] : doc["values"].items()) {
    const Poly rep = parse_poly(field, key);
    if (!(rep.degree() < domain->modulus().degree())) {
      throw DomainError("table key '" + key + "' is not a canonical representative modulo " +
                        domain->modulus().to_string());
    }
    if (!value.is_string()) throw ParseError("table value for '" + key + "' must be a string");
    const Poly image = parse_poly(field, value.get<std::string>());
    if (!(image.degree() < codomain->modulus().degree())) {
      throw DomainError("table value '" + value.get<std::string>() + "' is not reduced modulo " +
                        codomain->modulus().to_string());
    }
    auto& slot = slots[poly_to_index(rep)];
    if (slot) throw DomainError("table key '" + key + "' appears twice");
    slot = image;
  }
  std::vector<Poly> values;
  values.reserve(slots.size());
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i]) {
      throw DomainError("function table is not total: missing " + domain->element(i).to_string());
    }
    values.push_back(std::move(*slots[i]));
  }
  return FunctionTable(std::move(domain), std::move(codomain), std::move(values));
}

FunctionTable table_from_json_text(const FieldPtr& field, std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return table_from_json(field, doc);
}

}  // namespace cpf
