#pragma once

#include <cstdint>
#include <deque>
#include <ostream>
#include <string>
#include <vector>

#include "markov/bigint.hpp"

namespace markov::cli {

// One typed cell. Integers keep their exact decimal text so JSON can carry
// them as strings; numbers are printed with a fixed precision so output is
// byte-stable across runs.
struct Cell {
  enum class Kind { Integer, Number, Flag, Text, IntegerList };
  Kind kind = Kind::Text;
  std::string text;
  std::vector<std::string> items;
  double number = 0;
  bool flag = false;
};

Cell integer(const BigInt& v);
Cell integer(std::int64_t v);
Cell number(double v);
Cell flag(bool v);
Cell text(std::string v);
Cell rational(const Rational& v);
Cell integers(const std::vector<BigInt>& v);
Cell integers(const std::vector<std::uint64_t>& v);

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

struct Report {
  std::string command;
  std::deque<Table> tables;  // deque: table() references stay valid

  Table& table(std::string name, std::vector<std::string> columns) {
    tables.push_back(Table{std::move(name), std::move(columns), {}});
    return tables.back();
  }
};

enum class Format { Text, Csv, Json };

void render(const Report& report, Format format, std::ostream& out);

}  // namespace markov::cli
