#include "lagmatch/document.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <stdexcept>

#include "lagmatch/errors.hpp"

namespace lagmatch {

// Defined in the generated fixture table.
const std::vector<std::pair<std::string, std::string>>& embedded_fixtures();

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw SchemaError(path + ": " + message);
}

void check_object(const json& j, const std::string& path, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) fail(path, "expected an object");
  std::set<std::string> allowed;
  for (const char* k : required) {
    allowed.insert(k);
    if (!j.contains(k)) fail(path, std::string("missing key '") + k + "'");
  }
  for (const char* k : optional) allowed.insert(k);
  for (const auto& item : j.items()) {
    if (!allowed.count(item.key())) fail(path, "unexpected key '" + item.key() + "'");
  }
}

const json& array_at(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::int64_t get_int(const json& j, const std::string& path) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
      fail(path, "integer out of range");
    }
    return j.get<std::int64_t>();
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) fail(path, "expected an integer string");
    return v;
  }
  fail(path, "expected an integer");
}

int get_small_int(const json& j, const std::string& path) {
  const auto v = get_int(j, path);
  if (v < -(1 << 30) || v > (1 << 30)) fail(path, "integer out of range");
  return static_cast<int>(v);
}

IntVector get_int_vector(const json& j, const std::string& path) {
  IntVector out;
  std::size_t k = 0;
  for (const auto& x : array_at(j, path)) out.push_back(get_int(x, path + "[" + std::to_string(k++) + "]"));
  return out;
}

std::vector<IntVector> get_int_matrix(const json& j, const std::string& path) {
  std::vector<IntVector> rows;
  std::size_t k = 0;
  for (const auto& r : array_at(j, path)) rows.push_back(get_int_vector(r, path + "[" + std::to_string(k++) + "]"));
  for (const auto& r : rows) {
    if (r.size() != rows.size()) fail(path, "expected a square matrix");
  }
  return rows;
}

SpMatrix get_sp_matrix(const json& j, const std::string& path) {
  const auto rows = get_int_matrix(j, path);
  if (rows.size() % 2 != 0) fail(path, "symplectic matrix must have even size");
  const int genus = static_cast<int>(rows.size() / 2);
  if (genus > kMaxGenus) fail(path, "genus too large");
  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows.size(); ++c) m(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
  try {
    return SpMatrix(SymplecticLattice(genus), m);
  } catch (const NotSymplectic& e) {
    throw NotSymplectic(path + ": " + e.what());
  }
}

H1Vector get_circle(const json& j, const std::string& path) {
  const auto coords = get_int_vector(j, path);
  if (coords.empty() || coords.size() % 2 != 0) fail(path, "circle class needs 2g > 0 coordinates");
  if (coords.size() / 2 > static_cast<std::size_t>(kMaxGenus)) fail(path, "genus too large");
  return H1Vector(SymplecticLattice(static_cast<int>(coords.size() / 2)), coords);
}

FibrationDescriptor parse_fibration(const json& j) {
  const std::string path = "fibration";
  check_object(j, path, {"regions", "h2"}, {"round_circles", "lefschetz_points", "signature"});
  FibrationDescriptor d;
  std::size_t k = 0;
  for (const auto& r : array_at(j["regions"], path + ".regions")) {
    const std::string rp = path + ".regions[" + std::to_string(k++) + "]";
    check_object(r, rp, {"base_euler", "fiber_genera"}, {"label", "fiber_classes"});
    FibrationRegion region;
    if (r.contains("label")) {
      if (!r["label"].is_string()) fail(rp + ".label", "expected a string");
      region.label = r["label"].get<std::string>();
    } else {
      region.label = "region " + std::to_string(k);
    }
    region.base_euler = get_small_int(r["base_euler"], rp + ".base_euler");
    for (auto g : get_int_vector(r["fiber_genera"], rp + ".fiber_genera")) {
      if (g < 0 || g > (1 << 20)) fail(rp + ".fiber_genera", "genus out of range");
      region.fiber_genera.push_back(static_cast<int>(g));
    }
    if (r.contains("fiber_classes")) {
      std::size_t c = 0;
      for (const auto& f : array_at(r["fiber_classes"], rp + ".fiber_classes")) {
        region.fiber_classes.push_back(get_int_vector(f, rp + ".fiber_classes[" + std::to_string(c++) + "]"));
      }
    }
    d.regions.push_back(std::move(region));
  }
  if (j.contains("round_circles")) {
    std::size_t c = 0;
    for (const auto& rc : array_at(j["round_circles"], path + ".round_circles")) {
      const std::string cp = path + ".round_circles[" + std::to_string(c++) + "]";
      check_object(rc, cp, {"orientable"});
      if (!rc["orientable"].is_boolean()) fail(cp + ".orientable", "expected a boolean");
      d.round_circles.push_back({rc["orientable"].get<bool>()});
    }
  }
  if (j.contains("lefschetz_points")) d.lefschetz_points = get_small_int(j["lefschetz_points"], path + ".lefschetz_points");
  if (j.contains("signature")) d.signature = get_small_int(j["signature"], path + ".signature");
  const json& h2 = j["h2"];
  check_object(h2, path + ".h2", {"rank", "intersection", "canonical_c1"});
  d.h2.rank = get_small_int(h2["rank"], path + ".h2.rank");
  d.h2.intersection = get_int_matrix(h2["intersection"], path + ".h2.intersection");
  d.h2.canonical_c1 = get_int_vector(h2["canonical_c1"], path + ".h2.canonical_c1");
  d.validate();
  return d;
}

std::vector<SpinCEntry> parse_spinc(const json& j, const std::optional<FibrationDescriptor>& fib) {
  std::vector<SpinCEntry> out;
  std::size_t k = 0;
  for (const auto& s : array_at(j, "spinc")) {
    const std::string sp = "spinc[" + std::to_string(k++) + "]";
    check_object(s, sp, {}, {"label", "c1", "beta"});
    std::string label = "s" + std::to_string(k);
    if (s.contains("label")) {
      if (!s["label"].is_string()) fail(sp + ".label", "expected a string");
      label = s["label"].get<std::string>();
    }
    if (s.contains("c1") == s.contains("beta")) fail(sp, "give exactly one of 'c1' and 'beta'");
    SpinCEntry entry;
    if (s.contains("c1")) {
      entry.spinc = SpinC{label, get_int_vector(s["c1"], sp + ".c1")};
    } else {
      if (!fib) fail(sp + ".beta", "a Taubes class needs a fibration with a canonical class");
      entry.beta = get_int_vector(s["beta"], sp + ".beta");
      entry.spinc = taubes_convert(*entry.beta, *fib, label);
    }
    if (fib && static_cast<int>(entry.spinc.c1.size()) != fib->h2.rank) {
      throw InconsistentDescriptor(sp + ": c1 has " + std::to_string(entry.spinc.c1.size()) +
                                   " coordinates, H_2 rank is " + std::to_string(fib->h2.rank));
    }
    out.push_back(std::move(entry));
  }
  return out;
}

MorseCycle parse_cycle(const json& j) {
  check_object(j, "morse_cycle", {"genus", "points", "moves"});
  MorseCycle cycle;
  cycle.genus = get_small_int(j["genus"], "morse_cycle.genus");
  cycle.points = get_small_int(j["points"], "morse_cycle.points");
  if (cycle.genus < 0 || cycle.genus > kMaxGenus) fail("morse_cycle.genus", "genus out of range");
  if (cycle.points < 0 || cycle.points > 64) fail("morse_cycle.points", "point count out of range");
  std::size_t k = 0;
  for (const auto& m : array_at(j["moves"], "morse_cycle.moves")) {
    const std::string mp = "morse_cycle.moves[" + std::to_string(k++) + "]";
    if (!m.is_object() || !m.contains("kind") || !m["kind"].is_string()) fail(mp, "expected an object with a string 'kind'");
    const std::string kind = m["kind"].get<std::string>();
    if (kind == "twist") {
      check_object(m, mp, {"kind", "matrix"});
      cycle.moves.push_back(ElementaryMove::twist(get_sp_matrix(m["matrix"], mp + ".matrix")));
    } else if (kind == "down" || kind == "up") {
      check_object(m, mp, {"kind", "circle"}, {"basis_change"});
      const H1Vector circle = get_circle(m["circle"], mp + ".circle");
      std::optional<SpMatrix> b;
      if (m.contains("basis_change")) b = get_sp_matrix(m["basis_change"], mp + ".basis_change");
      try {
        cycle.moves.push_back(kind == "down" ? ElementaryMove::down(circle, b) : ElementaryMove::up(circle, b));
      } catch (const std::invalid_argument& e) {
        throw InconsistentDescriptor(mp + ": " + e.what());
      }
    } else {
      fail(mp + ".kind", "expected 'down', 'up' or 'twist'");
    }
  }
  return cycle;
}

std::vector<RealMatrix> parse_path(const json& j, const std::string& path) {
  std::vector<RealMatrix> samples;
  std::size_t k = 0;
  for (const auto& m : array_at(j, path)) {
    const std::string sp = path + "[" + std::to_string(k++) + "]";
    const auto& rows = array_at(m, sp);
    const auto dim = static_cast<Eigen::Index>(rows.size());
    RealMatrix mat(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
      const auto& row = array_at(rows[static_cast<std::size_t>(r)], sp + "[" + std::to_string(r) + "]");
      if (static_cast<Eigen::Index>(row.size()) != dim) fail(sp, "expected a square matrix");
      for (Eigen::Index c = 0; c < dim; ++c) {
        const auto& x = row[static_cast<std::size_t>(c)];
        if (!x.is_number()) fail(sp, "expected numbers");
        mat(r, c) = x.get<double>();
      }
    }
    samples.push_back(std::move(mat));
  }
  return samples;
}

void parse_query(const json& j, DescriptorDocument& doc) {
  check_object(j, "query", {}, {"cz", "gradings"});
  if (j.contains("cz")) {
    check_object(j["cz"], "query.cz", {"paths"});
    std::size_t k = 0;
    for (const auto& p : array_at(j["cz"]["paths"], "query.cz.paths")) {
      doc.cz_paths.push_back(parse_path(p, "query.cz.paths[" + std::to_string(k++) + "]"));
    }
  }
  if (j.contains("gradings")) {
    const json& g = j["gradings"];
    check_object(g, "query.gradings", {"c1", "n_gamma", "n", "g"}, {"g1", "g2"});
    GradingsQuery q;
    q.c1 = get_int_vector(g["c1"], "query.gradings.c1");
    q.n_gamma = get_int(g["n_gamma"], "query.gradings.n_gamma");
    q.n = get_small_int(g["n"], "query.gradings.n");
    q.g = get_small_int(g["g"], "query.gradings.g");
    if (g.contains("g1") != g.contains("g2")) fail("query.gradings", "give both 'g1' and 'g2' or neither");
    if (g.contains("g1")) {
      q.g1 = get_small_int(g["g1"], "query.gradings.g1");
      q.g2 = get_small_int(g["g2"], "query.gradings.g2");
    }
    doc.gradings = q;
  }
}

}  // namespace

DescriptorDocument parse_document(const json& j) {
  check_object(j, "document", {}, {"fibration", "spinc", "morse_cycle", "query", "description"});
  DescriptorDocument doc;
  if (j.contains("fibration")) doc.fibration = parse_fibration(j["fibration"]);
  if (j.contains("spinc")) doc.spinc = parse_spinc(j["spinc"], doc.fibration);
  if (j.contains("morse_cycle")) doc.morse_cycle = parse_cycle(j["morse_cycle"]);
  if (j.contains("query")) parse_query(j["query"], doc);
  return doc;
}

DescriptorDocument parse_document_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
  return parse_document(j);
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : embedded_fixtures()) names.push_back(name);
  std::sort(names.begin(), names.end());
  return names;
}

const std::string& fixture_text(const std::string& name) {
  for (const auto& [n, text] : embedded_fixtures()) {
    if (n == name) return text;
  }
  throw std::out_of_range("unknown fixture '" + name + "'");
}

}  // namespace lagmatch
