#include "skernel/io.hpp"

#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "skernel/error.hpp"

namespace skernel::io {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& field, const std::string& message) {
  throw InputError("field " + field + ": " + message);
}

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t k = 0; k < end; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                     what);
  }
}

const json& member(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail(path.empty() ? "<root>" : path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(join(path, key), "missing");
  return *it;
}

long long read_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  return v.get<long long>();
}

int read_small_int(const json& v, const std::string& path) {
  const long long x = read_int(v, path);
  if (x < std::numeric_limits<int>::min() / 2 || x > std::numeric_limits<int>::max() / 2)
    fail(path, "integer out of range");
  return static_cast<int>(x);
}

std::size_t read_count(const json& v, const std::string& path) {
  const long long x = read_int(v, path);
  if (x < 0) fail(path, "expected a nonnegative integer");
  if (x > 1'000'000) fail(path, "rank too large");
  return static_cast<std::size_t>(x);
}

int parse_key_int(const std::string& key, const std::string& path) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(key, &used);
  } catch (const std::exception&) {
    fail(join(path, key), "key is not an integer");
  }
  if (used != key.size()) fail(join(path, key), "key is not an integer");
  return value;
}

std::pair<int, int> parse_key_pair(const std::string& key, const std::string& path) {
  const auto comma = key.find(',');
  if (comma == std::string::npos) fail(join(path, key), "key must look like \"n,i\"");
  return {parse_key_int(key.substr(0, comma), join(path, key)),
          parse_key_int(key.substr(comma + 1), join(path, key))};
}

Integer read_integer(const json& v, const std::string& path) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Integer(v.get<unsigned long long>());
    return Integer(v.get<long long>());
  }
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      fail(path, "expected an integer or a decimal string");
    return Integer(s);
  }
  fail(path, "expected an integer");
}

ordered_json write_integer(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return static_cast<long long>(x);
  return x.str();
}

IntMatrix read_matrix(const json& v, std::size_t rows, std::size_t cols, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array of rows");
  if (v.size() != rows)
    fail(path, "expected " + std::to_string(rows) + " rows, found " + std::to_string(v.size()));
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rp = path + "[" + std::to_string(r) + "]";
    const json& row = v[r];
    if (!row.is_array()) fail(rp, "expected an array");
    if (row.size() != cols)
      fail(rp, "expected " + std::to_string(cols) + " entries, found " + std::to_string(row.size()));
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = read_integer(row[c], rp + "[" + std::to_string(c) + "]");
  }
  return m;
}

ordered_json write_matrix(const IntMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(write_integer(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, const std::string& path) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok) fail(join(path, it.key()), "unexpected field");
  }
}

// ---------------------------------------------------------------------------

ChainComplex chain_from(const json& doc, const std::string& path) {
  if (!doc.is_object()) fail(path.empty() ? "<root>" : path, "expected an object");
  reject_unknown(doc, {"min", "max", "ranks", "d"}, path);
  const int lo = read_small_int(member(doc, "min", path), join(path, "min"));
  const int hi = read_small_int(member(doc, "max", path), join(path, "max"));
  if (lo > hi) fail(join(path, "max"), "max is below min");
  if (hi - lo > 10'000) fail(join(path, "max"), "degree range too large");
  std::vector<std::size_t> ranks(static_cast<std::size_t>(hi - lo + 1), 0);
  const std::string rpath = join(path, "ranks");
  const json& rj = member(doc, "ranks", path);
  if (!rj.is_object()) fail(rpath, "expected an object");
  for (auto it = rj.begin(); it != rj.end(); ++it) {
    const int n = parse_key_int(it.key(), rpath);
    if (n < lo || n > hi) fail(join(rpath, it.key()), "degree outside [min, max]");
    ranks[static_cast<std::size_t>(n - lo)] = read_count(it.value(), join(rpath, it.key()));
  }
  auto rank = [&](int n) { return n < lo || n > hi ? 0 : ranks[static_cast<std::size_t>(n - lo)]; };
  std::map<int, IntMatrix> d;
  if (doc.contains("d")) {
    const std::string dpath = join(path, "d");
    const json& dj = doc["d"];
    if (!dj.is_object()) fail(dpath, "expected an object");
    for (auto it = dj.begin(); it != dj.end(); ++it) {
      const int n = parse_key_int(it.key(), dpath);
      if (n <= lo || n > hi) fail(join(dpath, it.key()), "differential outside (min, max]");
      d[n] = read_matrix(it.value(), rank(n - 1), rank(n), join(dpath, it.key()));
    }
  }
  try {
    return ChainComplex(lo, hi, std::move(ranks), std::move(d));
  } catch (const StructuralError& e) {
    throw InputError(std::string("identity violation: ") + e.what());
  }
}

SimplexRef parse_face(const std::string& text, const std::map<std::string, CellId>& cells,
                      const std::string& path) {
  std::istringstream is(text);
  std::vector<std::string> tokens;
  for (std::string t; is >> t;) tokens.push_back(t);
  if (tokens.empty()) fail(path, "empty simplex reference");
  auto base = cells.find(tokens.back());
  if (base == cells.end()) fail(path, "unknown or higher-dimensional cell '" + tokens.back() + "'");
  SimplexRef r;
  r.base = base->second;
  for (std::size_t k = 0; k + 1 < tokens.size(); ++k) {
    const std::string& t = tokens[k];
    if (t.size() < 2 || t[0] != 's' || t.find_first_not_of("0123456789", 1) != std::string::npos ||
        t.size() > 6)
      fail(path, "bad degeneracy token '" + t + "'");
    r.word.push_back(std::stoi(t.substr(1)));
  }
  return r;
}

SimplicialSet set_from(const json& doc, const std::string& path) {
  if (!doc.is_object()) fail(path.empty() ? "<root>" : path, "expected an object");
  reject_unknown(doc, {"pointed", "basepoint", "cells", "faces"}, path);
  bool pointed = false;
  if (doc.contains("pointed")) {
    if (!doc["pointed"].is_boolean()) fail(join(path, "pointed"), "expected a boolean");
    pointed = doc["pointed"].get<bool>();
  }
  const std::string cpath = join(path, "cells");
  const json& cj = member(doc, "cells", path);
  if (!cj.is_object()) fail(cpath, "expected an object");
  std::map<int, std::vector<std::string>> by_dim;
  for (auto it = cj.begin(); it != cj.end(); ++it) {
    const int d = parse_key_int(it.key(), cpath);
    if (d < 0 || d > 64) fail(join(cpath, it.key()), "dimension out of range");
    if (!it.value().is_array()) fail(join(cpath, it.key()), "expected an array of names");
    for (std::size_t k = 0; k < it.value().size(); ++k) {
      const json& nj = it.value()[k];
      const std::string np = join(cpath, it.key()) + "[" + std::to_string(k) + "]";
      if (!nj.is_string()) fail(np, "expected a string");
      const std::string name = nj.get<std::string>();
      if (name.empty() || name.find_first_of(" \t\n") != std::string::npos)
        fail(np, "cell names must be nonempty and free of whitespace");
      by_dim[d].push_back(name);
    }
  }
  const json empty_faces = json::object();
  const json& fj = doc.contains("faces") ? doc["faces"] : empty_faces;
  const std::string fpath = join(path, "faces");
  if (!fj.is_object()) fail(fpath, "expected an object");

  SimplicialSetBuilder b;
  std::map<std::string, CellId> cells;
  std::size_t used_faces = 0;
  for (const auto& [d, names] : by_dim) {
    std::map<std::string, CellId> added;
    for (const auto& name : names) {
      if (cells.count(name) || added.count(name)) fail(cpath, "duplicate cell name '" + name + "'");
      std::vector<SimplexRef> faces;
      const std::string np = join(fpath, name);
      if (d > 0) {
        if (!fj.contains(name)) fail(np, "missing");
        const json& list = fj[name];
        if (!list.is_array() || list.size() != static_cast<std::size_t>(d + 1))
          fail(np, "expected " + std::to_string(d + 1) + " faces");
        for (std::size_t i = 0; i < list.size(); ++i) {
          const std::string ip = np + "[" + std::to_string(i) + "]";
          if (!list[i].is_string()) fail(ip, "expected a string");
          faces.push_back(parse_face(list[i].get<std::string>(), cells, ip));
        }
        ++used_faces;
      } else if (fj.contains(name)) {
        fail(np, "vertices have no faces");
      }
      try {
        added.emplace(name, b.add_cell(d, name, std::move(faces)));
      } catch (const StructuralError& e) {
        fail(np, e.what());
      }
    }
    cells.insert(added.begin(), added.end());
  }
  if (used_faces != fj.size()) {
    for (auto it = fj.begin(); it != fj.end(); ++it)
      if (!cells.count(it.key())) fail(join(fpath, it.key()), "no such cell");
  }
  if (pointed) {
    const json& bj = member(doc, "basepoint", path);
    if (!bj.is_string()) fail(join(path, "basepoint"), "expected a cell name");
    auto it = cells.find(bj.get<std::string>());
    if (it == cells.end() || it->second.dim != 0)
      fail(join(path, "basepoint"), "basepoint must name a vertex");
    b.set_basepoint(it->second);
  } else if (doc.contains("basepoint") && !doc["basepoint"].is_null()) {
    fail(join(path, "basepoint"), "basepoint given for an unpointed set");
  }
  try {
    return b.build();
  } catch (const StructuralError& e) {
    throw InputError(std::string("identity violation: ") + e.what());
  }
}

SimplicialAbGroup group_from(const json& doc, const std::string& path) {
  if (!doc.is_object()) fail(path.empty() ? "<root>" : path, "expected an object");
  reject_unknown(doc, {"D", "ranks", "face", "degen"}, path);
  const int top = read_small_int(member(doc, "D", path), join(path, "D"));
  if (top < 0 || top > 32) fail(join(path, "D"), "truncation must lie in 0..32");
  const std::string rpath = join(path, "ranks");
  const json& rj = member(doc, "ranks", path);
  if (!rj.is_object()) fail(rpath, "expected an object");
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 1), 0);
  std::vector<bool> seen(ranks.size(), false);
  for (auto it = rj.begin(); it != rj.end(); ++it) {
    const int n = parse_key_int(it.key(), rpath);
    if (n < 0 || n > top) fail(join(rpath, it.key()), "level outside 0..D");
    ranks[static_cast<std::size_t>(n)] = read_count(it.value(), join(rpath, it.key()));
    seen[static_cast<std::size_t>(n)] = true;
  }
  for (int n = 0; n <= top; ++n)
    if (!seen[static_cast<std::size_t>(n)]) fail(join(rpath, std::to_string(n)), "missing");
  auto read_family = [&](const char* key, bool faces) {
    std::map<SimplicialAbGroup::Key, IntMatrix> out;
    const std::string fpath = join(path, key);
    const json& fj = member(doc, key, path);
    if (!fj.is_object()) fail(fpath, "expected an object");
    for (auto it = fj.begin(); it != fj.end(); ++it) {
      const auto [n, i] = parse_key_pair(it.key(), fpath);
      const std::string kp = join(fpath, it.key());
      const bool in_range = faces ? (n >= 1 && n <= top && i >= 0 && i <= n)
                                  : (n >= 0 && n < top && i >= 0 && i <= n);
      if (!in_range) fail(kp, "index outside the truncation");
      const std::size_t rows = ranks[static_cast<std::size_t>(faces ? n - 1 : n + 1)];
      out[{n, i}] = read_matrix(it.value(), rows, ranks[static_cast<std::size_t>(n)], kp);
    }
    for (int n = faces ? 1 : 0; n <= (faces ? top : top - 1); ++n)
      for (int i = 0; i <= n; ++i)
        if (!out.count({n, i})) fail(join(fpath, std::to_string(n) + "," + std::to_string(i)), "missing");
    return out;
  };
  auto faces = read_family("face", true);
  auto degens = read_family("degen", false);
  try {
    return SimplicialAbGroup(top, std::move(ranks), std::move(faces), std::move(degens));
  } catch (const StructuralError& e) {
    throw InputError(std::string("identity violation: ") + e.what());
  }
}

// ---------------------------------------------------------------------------

ordered_json chain_to(const ChainComplex& c) {
  ordered_json out;
  out["min"] = c.min_deg();
  out["max"] = c.max_deg();
  ordered_json ranks = ordered_json::object();
  for (int n = c.min_deg(); n <= c.max_deg(); ++n) ranks[std::to_string(n)] = c.rank(n);
  out["ranks"] = std::move(ranks);
  ordered_json d = ordered_json::object();
  for (int n = c.min_deg() + 1; n <= c.max_deg(); ++n) d[std::to_string(n)] = write_matrix(c.d(n));
  out["d"] = std::move(d);
  return out;
}

ordered_json set_to(const SimplicialSet& x) {
  ordered_json out;
  out["pointed"] = x.pointed();
  if (x.pointed()) out["basepoint"] = x.name(x.basepoint());
  ordered_json cells = ordered_json::object();
  ordered_json faces = ordered_json::object();
  for (int d = 0; d <= x.top_dim(); ++d) {
    ordered_json names = ordered_json::array();
    for (std::size_t i = 0; i < x.cell_count(d); ++i) {
      const CellId c{d, static_cast<int>(i)};
      names.push_back(x.name(c));
      if (d == 0) continue;
      ordered_json list = ordered_json::array();
      for (int j = 0; j <= d; ++j) list.push_back(x.ref_name(x.face(c, j)));
      faces[x.name(c)] = std::move(list);
    }
    cells[std::to_string(d)] = std::move(names);
  }
  out["cells"] = std::move(cells);
  out["faces"] = std::move(faces);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

ChainComplex parse_chain_complex(std::string_view text) { return chain_from(parse_json(text), ""); }

SimplicialSet parse_simplicial_set(std::string_view text) { return set_from(parse_json(text), ""); }

SimplicialAbGroup parse_simplicial_ab_group(std::string_view text) {
  return group_from(parse_json(text), "");
}

SimplicialMap parse_simplicial_map(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) fail("<root>", "expected an object");
  reject_unknown(doc, {"source", "target", "images"}, "");
  const SimplicialSet source = set_from(member(doc, "source", ""), "source");
  const SimplicialSet target = set_from(member(doc, "target", ""), "target");
  const json& ij = member(doc, "images", "");
  if (!ij.is_object()) fail("images", "expected an object");
  std::map<std::string, CellId> target_cells;
  for (int d = 0; d <= target.top_dim(); ++d)
    for (std::size_t i = 0; i < target.cell_count(d); ++i)
      target_cells.emplace(target.name(CellId{d, static_cast<int>(i)}), CellId{d, static_cast<int>(i)});
  std::vector<std::vector<SimplexRef>> images;
  for (int d = 0; d <= source.top_dim(); ++d) {
    images.emplace_back();
    for (std::size_t i = 0; i < source.cell_count(d); ++i) {
      const std::string& name = source.name(CellId{d, static_cast<int>(i)});
      const std::string ip = join("images", name);
      if (!ij.contains(name)) fail(ip, "missing");
      if (!ij[name].is_string()) fail(ip, "expected a simplex reference");
      images.back().push_back(parse_face(ij[name].get<std::string>(), target_cells, ip));
    }
  }
  if (ij.size() != source.total_cells()) fail("images", "entries for unknown cells");
  try {
    return SimplicialMap(source, target, std::move(images));
  } catch (const StructuralError& e) {
    throw InputError(std::string("identity violation: ") + e.what());
  }
}

Document parse_document(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) fail("<root>", "expected an object");
  if (doc.contains("cells")) return set_from(doc, "");
  if (doc.contains("D")) return group_from(doc, "");
  if (doc.contains("min") || doc.contains("ranks")) return chain_from(doc, "");
  fail("<root>", "not a chain complex, simplicial set or simplicial group document");
}

std::string serialize(const ChainComplex& c) { return chain_to(c).dump(2) + "\n"; }

std::string serialize(const SimplicialSet& x) { return set_to(x).dump(2) + "\n"; }

std::string serialize(const SimplicialAbGroup& a) {
  ordered_json out;
  out["D"] = a.trunc_dim();
  ordered_json ranks = ordered_json::object();
  for (int n = 0; n <= a.trunc_dim(); ++n) ranks[std::to_string(n)] = a.rank(n);
  out["ranks"] = std::move(ranks);
  ordered_json faces = ordered_json::object();
  for (int n = 1; n <= a.trunc_dim(); ++n)
    for (int i = 0; i <= n; ++i)
      faces[std::to_string(n) + "," + std::to_string(i)] = write_matrix(a.face(n, i));
  out["face"] = std::move(faces);
  ordered_json degens = ordered_json::object();
  for (int n = 0; n < a.trunc_dim(); ++n)
    for (int j = 0; j <= n; ++j)
      degens[std::to_string(n) + "," + std::to_string(j)] = write_matrix(a.degen(n, j));
  out["degen"] = std::move(degens);
  return out.dump(2) + "\n";
}

std::string serialize(const SimplicialMap& f) {
  ordered_json out;
  out["source"] = set_to(f.source());
  out["target"] = set_to(f.target());
  ordered_json images = ordered_json::object();
  const SimplicialSet& x = f.source();
  for (int d = 0; d <= x.top_dim(); ++d)
    for (std::size_t i = 0; i < x.cell_count(d); ++i) {
      const CellId c{d, static_cast<int>(i)};
      images[x.name(c)] = f.target().ref_name(f.image(c));
    }
  out["images"] = std::move(images);
  return out.dump(2) + "\n";
}

std::string serialize(const WeqCertificate& cert) {
  ordered_json out;
  out["pass"] = cert.pass();
  out["pi0"] = cert.pi0_bijective;
  ordered_json homology = ordered_json::object();
  for (const auto& [n, ok] : cert.homology_iso) homology[std::to_string(n)] = ok;
  out["homology"] = std::move(homology);
  out["groupoid"] = cert.groupoid;
  ordered_json quotients = ordered_json::object();
  for (const auto& [order, counts] : cert.quotients)
    quotients[std::to_string(order)] = ordered_json::array({counts.first, counts.second});
  out["quotients"] = std::move(quotients);
  return out.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace skernel::io
