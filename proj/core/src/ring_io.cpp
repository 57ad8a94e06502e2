#include "confbetti/ring.hpp"

#include <json.hpp>

namespace confbetti {

using nlohmann::json;

namespace {

Rational coefficient_from_json(const json& value) {
  if (value.is_number_integer()) return Rational(Integer(value.dump(), 10));
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw RingError(std::string("malformed document: ") + e.what());
    }
  }
  throw RingError("malformed document: coefficient must be an integer or a \"p/q\" string");
}

json coefficient_to_json(const Rational& c) {
  if (c.get_den() == 1 && c.get_num().fits_slong_p()) return json(c.get_num().get_si());
  return json(format_rational(c));
}

std::size_t index_from_json(const json& value, const char* what) {
  if (!value.is_number_integer() || value.get<long long>() < 0) {
    throw RingError(std::string("malformed document: ") + what + " must be a nonnegative integer");
  }
  return value.get<std::size_t>();
}

}  // namespace

GradedRing parse_ring(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw RingError(std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object()) throw RingError("malformed document: top level must be an object");
  for (const char* key : {"name", "dimension", "basis"}) {
    if (!doc.contains(key)) throw RingError(std::string("malformed document: missing field '") + key + "'");
  }
  if (!doc["name"].is_string()) throw RingError("malformed document: 'name' must be a string");
  if (!doc["dimension"].is_number_integer()) throw RingError("malformed document: 'dimension' must be an integer");
  if (!doc["basis"].is_array()) throw RingError("malformed document: 'basis' must be an array");

  std::vector<BasisElement> basis;
  for (const auto& b : doc["basis"]) {
    if (!b.is_object() || !b.contains("label") || !b.contains("degree") || !b["label"].is_string() ||
        !b["degree"].is_number_integer()) {
      throw RingError("malformed document: basis entries need a string 'label' and integer 'degree'");
    }
    basis.push_back({b["label"].get<std::string>(), b["degree"].get<int>()});
  }

  std::vector<ProductEntry> products;
  if (doc.contains("products")) {
    if (!doc["products"].is_array()) throw RingError("malformed document: 'products' must be an array");
    for (const auto& p : doc["products"]) {
      if (!p.is_array() || p.size() != 3 || !p[2].is_object()) {
        throw RingError("malformed document: each product must be [i, j, {k: coefficient}]");
      }
      ProductEntry entry{index_from_json(p[0], "product index i"), index_from_json(p[1], "product index j"), {}};
      for (auto it = p[2].begin(); it != p[2].end(); ++it) {
        std::size_t k = 0;
        try {
          std::size_t used = 0;
          k = std::stoul(it.key(), &used);
          if (used != it.key().size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
          throw RingError("malformed document: product target key '" + it.key() + "' is not an index");
        }
        entry.terms.emplace_back(k, coefficient_from_json(it.value()));
      }
      products.push_back(std::move(entry));
    }
  }
  return GradedRing(doc["name"].get<std::string>(), doc["dimension"].get<int>(), std::move(basis),
                    std::move(products));
}

std::string serialize_ring(const GradedRing& ring) {
  json doc;
  doc["name"] = ring.name();
  doc["dimension"] = ring.dimension();
  json basis = json::array();
  for (const auto& b : ring.basis()) basis.push_back({{"label", b.label}, {"degree", b.degree}});
  doc["basis"] = basis;
  json products = json::array();
  for (const auto& entry : ring.stored_products()) {
    json target = json::object();
    for (const auto& [k, c] : entry.terms) target[std::to_string(k)] = coefficient_to_json(c);
    products.push_back(json::array({entry.i, entry.j, target}));
  }
  doc["products"] = products;
  return doc.dump(2) + "\n";
}

}  // namespace confbetti
