#include "eqkit/serialize.hpp"

#include <string>
#include <vector>

#include "eqkit/errors.hpp"

namespace eqkit {

using nlohmann::ordered_json;

ordered_json group_to_json(const FiniteGroup& g) {
  ordered_json j;
  j["label"] = g.label;
  j["order"] = g.n;
  j["table"] = g.table;
  return j;
}

FiniteGroup group_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("table"))
    throw ParseError(ParseError::Kind::BadFormat, "group JSON wants an object with a 'table'");
  std::vector<std::vector<int>> table;
  try {
    table = j.at("table").get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(ParseError::Kind::BadFormat,
                     std::string("group JSON table is malformed: ") + e.what());
  }
  std::string label = j.value("label", std::string{});
  FiniteGroup g = from_table(table, label);
  if (j.contains("order") && j.at("order").get<int>() != g.n)
    throw ParseError(ParseError::Kind::BadFormat,
                     "group JSON order does not match the table size");
  return g;
}

ordered_json algebra_to_json(const FiniteAlgebra& a) {
  ordered_json ops = ordered_json::object();
  for (size_t i = 0; i < a.sig.ops.size(); ++i) {
    const OpSym& op = a.sig.ops[i];
    const std::vector<int>& t = a.tables[i];
    switch (op.arity) {
      case 0:
        ops[op.name] = t[0];
        break;
      case 1:
        ops[op.name] = t;
        break;
      default: {
        ordered_json rows = ordered_json::array();
        for (int x = 0; x < a.n; ++x)
          rows.push_back(std::vector<int>(t.begin() + static_cast<size_t>(x) * a.n,
                                          t.begin() + static_cast<size_t>(x + 1) * a.n));
        ops[op.name] = std::move(rows);
      }
    }
  }
  ordered_json j;
  j["size"] = a.n;
  j["ops"] = std::move(ops);
  return j;
}

FiniteAlgebra algebra_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("size") || !j.contains("ops") || !j.at("ops").is_object())
    throw ParseError(ParseError::Kind::BadFormat,
                     "algebra JSON wants an object with 'size' and 'ops'");
  FiniteAlgebra a;
  a.n = j.at("size").get<int>();
  if (a.n < 1)
    throw ParseError(ParseError::Kind::BadFormat, "algebra JSON size must be >= 1");

  auto bad = [](const std::string& name, const std::string& why) {
    return ParseError(ParseError::Kind::BadFormat,
                      "algebra JSON op '" + name + "' " + why);
  };
  for (const auto& [name, value] : j.at("ops").items()) {
    std::vector<int> table;
    int arity;
    if (value.is_number_integer()) {
      arity = 0;
      table = {value.get<int>()};
    } else if (value.is_array() && (value.empty() || !value[0].is_array())) {
      arity = 1;
      table = value.get<std::vector<int>>();
      if (static_cast<int>(table.size()) != a.n) throw bad(name, "has a wrong-sized table");
    } else if (value.is_array()) {
      arity = 2;
      auto rows = value.get<std::vector<std::vector<int>>>();
      if (static_cast<int>(rows.size()) != a.n) throw bad(name, "has a wrong-sized table");
      for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != a.n) throw bad(name, "has a ragged table");
        table.insert(table.end(), row.begin(), row.end());
      }
    } else {
      throw bad(name, "is neither an integer nor an array");
    }
    for (int v : table)
      if (v < 0 || v >= a.n) throw bad(name, "has an out-of-range value");
    a.sig.ops.push_back({name, arity});
    a.tables.push_back(std::move(table));
  }
  return a;
}

}  // namespace eqkit
