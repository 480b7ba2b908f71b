#include "report.hpp"

#include <algorithm>
#include <cstdio>

#include "json.hpp"

namespace markov::cli {

Cell integer(const BigInt& v) { return Cell{Cell::Kind::Integer, to_decimal(v), {}, 0, false}; }
Cell integer(std::int64_t v) { return Cell{Cell::Kind::Integer, std::to_string(v), {}, 0, false}; }
Cell flag(bool v) { return Cell{Cell::Kind::Flag, v ? "true" : "false", {}, 0, v}; }
Cell text(std::string v) { return Cell{Cell::Kind::Text, std::move(v), {}, 0, false}; }
Cell rational(const Rational& v) { return text(to_decimal(v)); }

Cell number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return Cell{Cell::Kind::Number, buf, {}, v, false};
}

Cell integers(const std::vector<BigInt>& v) {
  Cell c{Cell::Kind::IntegerList, {}, {}, 0, false};
  for (const auto& x : v) c.items.push_back(to_decimal(x));
  return c;
}

Cell integers(const std::vector<std::uint64_t>& v) {
  Cell c{Cell::Kind::IntegerList, {}, {}, 0, false};
  for (auto x : v) c.items.push_back(std::to_string(x));
  return c;
}

namespace {

std::string flat(const Cell& c) {
  if (c.kind != Cell::Kind::IntegerList) return c.text;
  std::string s;
  for (const auto& i : c.items) s += (s.empty() ? "" : " ") + i;
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

nlohmann::ordered_json to_json(const Cell& c) {
  switch (c.kind) {
    case Cell::Kind::Number: return std::stod(c.text);
    case Cell::Kind::Flag: return c.flag;
    case Cell::Kind::IntegerList: return c.items;
    default: return c.text;
  }
}

void render_text(const Table& t, std::ostream& out) {
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], flat(row[i]).size());
  }
  auto line = [&](auto get) {
    std::string s;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      std::string cell = get(i);
      if (i + 1 < t.columns.size()) cell.resize(width[i], ' ');
      s += (i ? "  " : "") + cell;
    }
    out << s << '\n';
  };
  line([&](std::size_t i) { return t.columns[i]; });
  for (const auto& row : t.rows) line([&](std::size_t i) { return flat(row[i]); });
}

}  // namespace

void render(const Report& report, Format format, std::ostream& out) {
  const bool many = report.tables.size() > 1;
  if (format == Format::Json) {
    nlohmann::ordered_json doc;
    doc["command"] = report.command;
    for (const auto& t : report.tables) {
      auto rows = nlohmann::ordered_json::array();
      for (const auto& row : t.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = to_json(row[i]);
        rows.push_back(std::move(obj));
      }
      doc[t.name] = std::move(rows);
    }
    out << doc.dump(2) << '\n';
    return;
  }
  for (std::size_t k = 0; k < report.tables.size(); ++k) {
    const Table& t = report.tables[k];
    if (k) out << '\n';
    if (many) out << "# " << t.name << '\n';
    if (format == Format::Text) {
      render_text(t, out);
      continue;
    }
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << csv_field(t.columns[i]);
    out << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(flat(row[i]));
      out << '\n';
    }
  }
}

}  // namespace markov::cli
