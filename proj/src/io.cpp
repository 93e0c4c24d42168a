#include "toastkit/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace toastkit {

namespace {

using nlohmann::json;

std::string join_coords(const Point& p) {
  std::ostringstream os;
  for (int i = 0; i < p.n(); ++i) {
    if (i) os << ',';
    os << p[i];
  }
  return os.str();
}

Point parse_coords(const std::string& s) {
  Point p;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) p.c.push_back(std::stoll(part));
  if (p.c.empty()) throw UsageError("empty coordinate list: " + s);
  return p;
}

std::vector<i64> to_vec(const Point& p) { return p.c; }

Point from_vec(const std::vector<i64>& v) { return Point(v); }

// key=value tokens from a header line.
std::string header_value(const std::string& line, const std::string& key) {
  std::stringstream ss(line);
  std::string tok;
  while (ss >> tok) {
    if (tok.rfind(key + "=", 0) == 0) return tok.substr(key.size() + 1);
  }
  throw UsageError("missing header field '" + key + "' in: " + line);
}

}  // namespace

void write_toast(std::ostream& os, const Toast& t) {
  json header;
  header["n"] = t.box.n();
  header["q"] = t.q;
  header["box_lo"] = to_vec(t.box.lo);
  header["box_hi"] = to_vec(t.box.hi);
  header["topology"] = to_string(t.box.topology);
  os << header.dump() << '\n';
  for (const Rect& r : t.pieces) {
    json piece;
    piece["lo"] = to_vec(r.lo);
    piece["hi"] = to_vec(r.hi);
    os << piece.dump() << '\n';
  }
}

RawToast read_toast(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw UsageError("empty toast file");
  json header = json::parse(line);
  RawToast out;
  out.q = header.at("q").get<i64>();
  out.box = Box(from_vec(header.at("box_lo").get<std::vector<i64>>()),
                from_vec(header.at("box_hi").get<std::vector<i64>>()),
                topology_from_string(header.at("topology").get<std::string>()));
  const int n = header.at("n").get<int>();
  if (n != out.box.n()) throw UsageError("toast header dimension mismatch");
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    json piece = json::parse(line);
    out.pieces.emplace_back(from_vec(piece.at("lo").get<std::vector<i64>>()),
                            from_vec(piece.at("hi").get<std::vector<i64>>()));
  }
  return out;
}

void write_labeling(std::ostream& os, const Labeling& f) {
  os << "n=" << f.box.n() << " lo=" << join_coords(f.box.lo)
     << " hi=" << join_coords(f.box.hi)
     << " topology=" << to_string(f.box.topology) << " alphabet=";
  for (size_t i = 0; i < f.alphabet.size(); ++i) {
    if (i) os << ',';
    os << f.alphabet[i];
  }
  os << '\n';
  const int n = f.box.n();
  const i64 row_len = f.box.extent(n - 1);
  const i64 rows = f.box.cell_count() / row_len;
  for (i64 r = 0; r < rows; ++r) {
    os.write(f.cells.data() + r * row_len, row_len);
    os << '\n';
  }
}

Labeling read_labeling(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw UsageError("empty labeling file");
  const int n = std::stoi(header_value(line, "n"));
  Box box(parse_coords(header_value(line, "lo")),
          parse_coords(header_value(line, "hi")),
          topology_from_string(header_value(line, "topology")));
  if (box.n() != n) throw UsageError("labeling header dimension mismatch");
  std::string alpha_csv = header_value(line, "alphabet");
  std::string alphabet;
  for (char c : alpha_csv)
    if (c != ',') alphabet.push_back(c);

  Labeling f(box, alphabet, alphabet.empty() ? '?' : alphabet[0]);
  const i64 row_len = box.extent(n - 1);
  const i64 rows = box.cell_count() / row_len;
  for (i64 r = 0; r < rows; ++r) {
    if (!std::getline(is, line) || static_cast<i64>(line.size()) != row_len)
      throw UsageError("labeling row " + std::to_string(r) + " malformed");
    for (i64 i = 0; i < row_len; ++i) {
      const char c = line[(size_t)i];
      if (alphabet.find(c) == std::string::npos)
        throw UsageError(std::string("label '") + c + "' not in alphabet");
      f.cells[(size_t)(r * row_len + i)] = c;
    }
  }
  return f;
}

void write_field(std::ostream& os, const RandomField& f) {
  os << f.box.n() << ' ' << join_coords(f.box.lo) << ' '
     << join_coords(f.box.hi) << ' ' << to_string(f.box.topology) << ' '
     << to_string(f.kind) << ' ' << f.seed << '\n';
  if (f.kind == RandomField::Kind::Bits) {
    const size_t count = f.bits.size();
    std::string packed((count + 7) / 8, '\0');
    for (size_t i = 0; i < count; ++i)
      if (f.bits[i]) packed[i / 8] |= static_cast<char>(1u << (i % 8));
    os.write(packed.data(), static_cast<std::streamsize>(packed.size()));
  } else {
    for (std::uint64_t v : f.numer) {
      char buf[8];
      for (int b = 0; b < 8; ++b) buf[b] = static_cast<char>((v >> (8 * b)) & 0xffu);
      os.write(buf, 8);
    }
  }
}

RandomField read_field(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw UsageError("empty field file");
  std::stringstream ss(line);
  int n;
  std::string lo_s, hi_s, topo_s, kind_s;
  std::uint64_t seed;
  if (!(ss >> n >> lo_s >> hi_s >> topo_s >> kind_s >> seed))
    throw UsageError("malformed field header: " + line);
  RandomField f;
  f.box = Box(parse_coords(lo_s), parse_coords(hi_s),
              topology_from_string(topo_s));
  if (f.box.n() != n) throw UsageError("field header dimension mismatch");
  f.kind = field_kind_from_string(kind_s);
  f.seed = seed;
  const size_t count = static_cast<size_t>(f.box.cell_count());
  if (f.kind == RandomField::Kind::Bits) {
    std::string packed((count + 7) / 8, '\0');
    is.read(packed.data(), static_cast<std::streamsize>(packed.size()));
    if (static_cast<size_t>(is.gcount()) != packed.size())
      throw UsageError("field payload truncated");
    f.bits.resize(count);
    for (size_t i = 0; i < count; ++i)
      f.bits[i] = (packed[i / 8] >> (i % 8)) & 1;
  } else {
    f.numer.resize(count);
    for (size_t i = 0; i < count; ++i) {
      char buf[8];
      is.read(buf, 8);
      if (is.gcount() != 8) throw UsageError("field payload truncated");
      std::uint64_t v = 0;
      for (int b = 0; b < 8; ++b)
        v |= static_cast<std::uint64_t>(static_cast<unsigned char>(buf[b]))
             << (8 * b);
      f.numer[i] = v;
    }
  }
  return f;
}

void write_triple(std::ostream& os, const Labeling& f, const Labeling& h1,
                  const Labeling& h2) {
  write_labeling(os, f);
  os << "---\n";
  write_labeling(os, h1);
  os << "---\n";
  write_labeling(os, h2);
}

std::array<Labeling, 3> read_triple(std::istream& is) {
  // read_labeling consumes exactly its rows, so the separators are the next
  // lines in the stream.
  std::array<Labeling, 3> out{read_labeling(is), Labeling{}, Labeling{}};
  std::string sep;
  for (int part = 1; part < 3; ++part) {
    if (!std::getline(is, sep) || sep != "---")
      throw UsageError("expected '---' separator in labeling triple");
    out[(size_t)part] = read_labeling(is);
  }
  return out;
}

void write_violations_csv(std::ostream& os,
                          const std::vector<Violation>& violations) {
  os << "anchor,tag,reason\n";
  for (const auto& v : violations) {
    std::string anchor = to_string(v.anchor);
    os << anchor << ',' << v.tag << ',' << v.reason << '\n';
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open " + path + " for writing");
  out << content;
}

}  // namespace toastkit
