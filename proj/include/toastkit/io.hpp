#pragma once

// File formats. All formats are byte-exact targets:
//  - Toast: JSON-lines, a header object then one object per piece.
//  - Labeling: one text header line, then rows of single-character codes,
//    last axis fastest.
//  - RandomField: one text header line, then raw values (bits packed 8 per
//    byte row-major, reals as little-endian 64-bit dyadic numerators).
//  - Labeling triple: three Labeling blocks separated by "---" lines.
//  - Violations: CSV with a header row.

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "toastkit/rng.hpp"
#include "toastkit/toast.hpp"

namespace toastkit {

struct RawToast {
  std::vector<Rect> pieces;
  i64 q = 0;
  Box box;
};

void write_toast(std::ostream& os, const Toast& t);
RawToast read_toast(std::istream& is);

void write_labeling(std::ostream& os, const Labeling& f);
Labeling read_labeling(std::istream& is);

void write_field(std::ostream& os, const RandomField& f);
RandomField read_field(std::istream& is);

void write_triple(std::ostream& os, const Labeling& f, const Labeling& h1,
                  const Labeling& h2);
std::array<Labeling, 3> read_triple(std::istream& is);

void write_violations_csv(std::ostream& os,
                          const std::vector<Violation>& violations);

// Whole-file helpers.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace toastkit
