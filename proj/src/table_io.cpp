#include <json.hpp>
#include <string>

#include "xprod/error.hpp"
#include "xprod/table.hpp"

namespace xprod {

std::string table_to_markdown(const MulTable& table) {
  const std::size_t n = table.n();
  std::string out = "| × |";
  for (std::size_t j = 1; j <= n; ++j) out += " " + basis_label(j) + " |";
  out += "\n|---|";
  for (std::size_t j = 1; j <= n; ++j) out += "---|";
  out += "\n";
  for (std::size_t i = 1; i <= n; ++i) {
    out += "| " + basis_label(i) + " |";
    for (std::size_t j = 1; j <= n; ++j) out += " " + table.at(i, j).to_string() + " |";
    out += "\n";
  }
  return out;
}

std::string table_to_csv(const MulTable& table) {
  std::string out;
  for (std::size_t i = 1; i <= table.n(); ++i) {
    for (std::size_t j = 1; j <= table.n(); ++j) {
      if (j > 1) out += ',';
      out += std::to_string(table.at(i, j).to_int());
    }
    out += '\n';
  }
  return out;
}

std::string table_to_json(const MulTable& table) {
  nlohmann::ordered_json cells = nlohmann::ordered_json::array();
  for (std::size_t i = 1; i <= table.n(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t j = 1; j <= table.n(); ++j) row.push_back(table.at(i, j).to_int());
    cells.push_back(std::move(row));
  }
  nlohmann::ordered_json doc = {{"k", table.k()}, {"n", table.n()}, {"cells", std::move(cells)}};
  return doc.dump() + "\n";
}

MulTable table_from_json(std::string_view text) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::ordered_json::exception& e) {
    throw ParseError(std::string("table JSON: ") + e.what());
  }
  try {
    const int k = doc.at("k").get<int>();
    const std::size_t n = doc.at("n").get<std::size_t>();
    if (k < 0 || k > kMaxLevel || n != basis_size(k)) {
      throw ParseError("table JSON: n=" + std::to_string(n) + " does not match k=" +
                       std::to_string(k));
    }
    const auto& rows = doc.at("cells");
    if (!rows.is_array() || rows.size() != n) throw ParseError("table JSON: bad row count");
    std::vector<SignedBasis> cells;
    cells.reserve(n * n);
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != n) {
        throw ParseError("table JSON: bad column count");
      }
      for (const auto& c : row) cells.push_back(SignedBasis::from_int(c.get<std::int64_t>()));
    }
    return MulTable(k, std::move(cells));
  } catch (const nlohmann::ordered_json::exception& e) {
    throw ParseError(std::string("table JSON: ") + e.what());
  }
}

}  // namespace xprod
