#include "ksrd/family.hpp"

#include <map>
#include <sstream>

#include "ksrd/errors.hpp"

namespace ksrd {

namespace {

struct FamilyInfo {
  Family family;
  const char* long_name;
  const char* short_name;
  int param_count;
};

constexpr FamilyInfo kFamilies[] = {
    {Family::path, "path", "pn", 1},
    {Family::cycle, "cycle", "cn", 1},
    {Family::complete, "complete", "kn", 1},
    {Family::star, "star", "sn", 1},
    {Family::wheel, "wheel", "wn", 1},
    {Family::complete_bipartite, "complete_bipartite", "knp", 2},
    {Family::grid2, "grid2", "grid2", 1},
    {Family::grid, "grid", "grid", 2},
    {Family::polytope_D, "polytope_D", "dn", 1},
    {Family::polytope_Rpp, "polytope_Rpp", "rpp", 1},
    {Family::polytope_A, "polytope_A", "an", 1},
};

const FamilyInfo& info_for(Family f) {
  for (const auto& fi : kFamilies)
    if (fi.family == f) return fi;
  throw internal_error("unknown family enum value");
}

[[noreturn]] void bad_range(const FamilySpec& spec, const std::string& why) {
  throw range_error("family " + family_name(spec.family) + ": " + why);
}

}  // namespace

std::string family_name(Family f) { return info_for(f).long_name; }

FamilySpec parse_family_spec(std::string_view token) {
  auto colon = token.find(':');
  if (colon == std::string_view::npos || colon == 0 || colon + 1 >= token.size())
    throw format_error("family spec must look like \"name:params\", got: " +
                       std::string(token));
  std::string name(token.substr(0, colon));
  std::string params(token.substr(colon + 1));

  const FamilyInfo* match = nullptr;
  for (const auto& fi : kFamilies) {
    if (name == fi.long_name || name == fi.short_name) {
      match = &fi;
      break;
    }
  }
  if (!match) throw format_error("unknown family \"" + name + "\"");

  FamilySpec spec{match->family, {}};
  std::istringstream ps(params);
  std::string item;
  while (std::getline(ps, item, ',')) {
    try {
      size_t used = 0;
      int value = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      spec.params.push_back(value);
    } catch (const std::exception&) {
      throw format_error("bad parameter \"" + item + "\" in spec: " +
                         std::string(token));
    }
  }
  if (static_cast<int>(spec.params.size()) != match->param_count)
    throw format_error("family " + name + " takes " +
                       std::to_string(match->param_count) + " parameter(s)");
  validate_family_spec(spec);
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  std::string out = info_for(spec.family).short_name;
  out += ':';
  for (size_t i = 0; i < spec.params.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(spec.params[i]);
  }
  return out;
}

void validate_family_spec(const FamilySpec& spec) {
  const auto& p = spec.params;
  if (static_cast<int>(p.size()) != info_for(spec.family).param_count)
    bad_range(spec, "wrong parameter count");
  switch (spec.family) {
    case Family::path:
    case Family::complete:
      if (p[0] < 1) bad_range(spec, "needs n >= 1");
      break;
    case Family::cycle:
      if (p[0] < 3) bad_range(spec, "needs n >= 3");
      break;
    case Family::star:
      if (p[0] < 3) bad_range(spec, "needs n >= 3");
      break;
    case Family::wheel:
      if (p[0] < 4) bad_range(spec, "needs n >= 4");
      break;
    case Family::complete_bipartite:
      if (p[1] < 1 || p[0] < p[1]) bad_range(spec, "needs n >= p >= 1");
      break;
    case Family::grid2:
      if (p[0] < 1) bad_range(spec, "needs n >= 1");
      break;
    case Family::grid:
      if (p[0] < 1 || p[1] < 1) bad_range(spec, "needs m, n >= 1");
      break;
    case Family::polytope_D:
    case Family::polytope_Rpp:
    case Family::polytope_A:
      if (p[0] < 5) bad_range(spec, "needs n >= 5");
      break;
  }
}

int family_vertex_count(const FamilySpec& spec) {
  validate_family_spec(spec);
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::path:
    case Family::cycle:
    case Family::complete:
    case Family::star:
    case Family::wheel:
      return p[0];
    case Family::complete_bipartite:
      return p[0] + p[1];
    case Family::grid2:
      return 2 * p[0];
    case Family::grid:
      return p[0] * p[1];
    case Family::polytope_D:
      return 4 * p[0];
    case Family::polytope_Rpp:
      return 6 * p[0];
    case Family::polytope_A:
      return 3 * p[0];
  }
  throw internal_error("unreachable");
}

namespace {

std::vector<std::string> block_names(std::initializer_list<char> blocks, int n,
                                     int first_index) {
  std::vector<std::string> names;
  names.reserve(blocks.size() * n);
  for (char b : blocks)
    for (int i = 0; i < n; ++i)
      names.push_back(std::string(1, b) + "_" + std::to_string(i + first_index));
  return names;
}

Graph make_path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e), block_names({'a'}, n, 1));
}

Graph make_cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(n - 1, 0);
  return Graph(n, std::move(e), block_names({'a'}, n, 1));
}

Graph make_complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, std::move(e), block_names({'v'}, n, 1));
}

Graph make_star(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(0, i);
  return Graph(n, std::move(e), block_names({'a'}, n, 1));
}

// Standard wheel: hub a_1 joined to every rim vertex, rim a_2..a_n closed
// into a cycle.
Graph make_wheel(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(0, i);
  for (int i = 1; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(n - 1, 1);
  return Graph(n, std::move(e), block_names({'a'}, n, 1));
}

Graph make_complete_bipartite(int n, int p) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < p; ++j) e.emplace_back(i, n + j);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("u_" + std::to_string(i + 1));
  for (int j = 0; j < p; ++j) names.push_back("v_" + std::to_string(j + 1));
  return Graph(n + p, std::move(e), std::move(names));
}

// Row-major: row 1 ids 0..n-1, row 2 ids n..2n-1.
Graph make_grid2(int n) {
  std::vector<std::pair<int, int>> e;
  for (int j = 0; j + 1 < n; ++j) e.emplace_back(j, j + 1);
  for (int j = 0; j + 1 < n; ++j) e.emplace_back(n + j, n + j + 1);
  for (int j = 0; j < n; ++j) e.emplace_back(j, n + j);
  std::vector<std::string> names;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= n; ++j)
      names.push_back("a_" + std::to_string(i) + "," + std::to_string(j));
  return Graph(2 * n, std::move(e), std::move(names));
}

Graph make_grid(int m, int n) {
  auto id = [n](int i, int j) { return i * n + j; };
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j + 1 < n; ++j) e.emplace_back(id(i, j), id(i, j + 1));
  for (int i = 0; i + 1 < m; ++i)
    for (int j = 0; j < n; ++j) e.emplace_back(id(i, j), id(i + 1, j));
  std::vector<std::string> names;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j)
      names.push_back("a_" + std::to_string(i) + "," + std::to_string(j));
  return Graph(m * n, std::move(e), std::move(names));
}

Graph make_polytope_d(int n) {
  auto a = [n](int i) { return (i % n + n) % n; };
  const int B = n, C = 2 * n, D = 3 * n;
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, a(i + 1));              // a_i a_{i+1}
  for (int i = 0; i < n; ++i) e.emplace_back(D + i, D + a(i + 1));     // d_i d_{i+1}
  for (int i = 0; i < n; ++i) e.emplace_back(i, B + i);                // a_i b_i
  for (int i = 0; i < n; ++i) e.emplace_back(B + i, C + i);            // b_i c_i
  for (int i = 0; i < n; ++i) e.emplace_back(B + a(i + 1), C + i);     // b_{i+1} c_i
  for (int i = 0; i < n; ++i) e.emplace_back(C + i, D + i);            // c_i d_i
  return Graph(4 * n, std::move(e), block_names({'a', 'b', 'c', 'd'}, n, 0));
}

Graph make_polytope_rpp(int n) {
  auto a = [n](int i) { return (i % n + n) % n; };
  const int B = n, C = 2 * n, D = 3 * n, E = 4 * n, F = 5 * n;
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, a(i + 1));              // a_i a_{i+1}
  for (int i = 0; i < n; ++i) e.emplace_back(F + i, F + a(i + 1));     // f_i f_{i+1}
  for (int i = 0; i < n; ++i) e.emplace_back(i, B + i);                // a_i b_i
  for (int i = 0; i < n; ++i) e.emplace_back(B + i, C + i);            // b_i c_i
  for (int i = 0; i < n; ++i) e.emplace_back(C + i, D + i);            // c_i d_i
  for (int i = 0; i < n; ++i) e.emplace_back(D + i, E + i);            // d_i e_i
  for (int i = 0; i < n; ++i) e.emplace_back(E + i, F + i);            // e_i f_i
  for (int i = 0; i < n; ++i) e.emplace_back(B + a(i + 1), C + i);     // b_{i+1} c_i
  for (int i = 0; i < n; ++i) e.emplace_back(D + i, E + a(i + 1));     // d_i e_{i+1}
  return Graph(6 * n, std::move(e),
               block_names({'a', 'b', 'c', 'd', 'e', 'f'}, n, 0));
}

Graph make_polytope_a(int n) {
  auto a = [n](int i) { return (i % n + n) % n; };
  const int B = n, C = 2 * n;
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, a(i + 1));              // a_i a_{i+1}
  for (int i = 0; i < n; ++i) e.emplace_back(B + i, B + a(i + 1));     // b_i b_{i+1}
  for (int i = 0; i < n; ++i) e.emplace_back(C + i, C + a(i + 1));     // c_i c_{i+1}
  for (int i = 0; i < n; ++i) e.emplace_back(i, B + i);                // a_i b_i
  for (int i = 0; i < n; ++i) e.emplace_back(B + i, C + i);            // b_i c_i
  for (int i = 0; i < n; ++i) e.emplace_back(a(i + 1), B + i);         // a_{i+1} b_i
  for (int i = 0; i < n; ++i) e.emplace_back(B + a(i + 1), C + i);     // b_{i+1} c_i
  return Graph(3 * n, std::move(e), block_names({'a', 'b', 'c'}, n, 0));
}

}  // namespace

Graph make_family(const FamilySpec& spec) {
  validate_family_spec(spec);
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::path: return make_path(p[0]);
    case Family::cycle: return make_cycle(p[0]);
    case Family::complete: return make_complete(p[0]);
    case Family::star: return make_star(p[0]);
    case Family::wheel: return make_wheel(p[0]);
    case Family::complete_bipartite: return make_complete_bipartite(p[0], p[1]);
    case Family::grid2: return make_grid2(p[0]);
    case Family::grid: return make_grid(p[0], p[1]);
    case Family::polytope_D: return make_polytope_d(p[0]);
    case Family::polytope_Rpp: return make_polytope_rpp(p[0]);
    case Family::polytope_A: return make_polytope_a(p[0]);
  }
  throw internal_error("unreachable");
}

}  // namespace ksrd
