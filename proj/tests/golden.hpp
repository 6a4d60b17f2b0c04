#pragma once

// Reference tables shipped under tests/data.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#ifndef ECPAIRS_TEST_DATA_DIR
#error "ECPAIRS_TEST_DATA_DIR must be defined"
#endif

namespace golden {

inline std::vector<std::vector<std::string>> read_csv(const std::string& name) {
  const std::string path = std::string(ECPAIRS_TEST_DATA_DIR) + "/" + name;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

struct CensusRow {
  unsigned long long d, h;
  double xi;
  unsigned long long Y;
  double c_hat;
};

/// Pair counts below 10^7 for every d = 3 (mod 8), h(-d) <= 4, d <= 1555.
inline std::vector<CensusRow> census_1e7() {
  std::vector<CensusRow> out;
  for (const auto& r : read_csv("census_1e7.csv")) {
    out.push_back({std::stoull(r[0]), std::stoull(r[1]), std::stod(r[2]), std::stoull(r[3]),
                   std::stod(r[4])});
  }
  return out;
}

struct Mod7Row {
  int a, b;
  int residues[6];
  int product;
};

inline std::vector<Mod7Row> mod7_residues() {
  std::vector<Mod7Row> out;
  for (const auto& r : read_csv("mod7_residues.csv")) {
    Mod7Row m{};
    m.a = std::stoi(r[0]);
    m.b = std::stoi(r[1]);
    for (int i = 0; i < 6; ++i) m.residues[i] = std::stoi(r[2 + i]);
    m.product = std::stoi(r[8]);
    out.push_back(m);
  }
  return out;
}

}  // namespace golden
