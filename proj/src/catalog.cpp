#include "qsrg/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "qsrg/errors.hpp"

namespace qsrg {

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw parse_error("ParseError: cyclic group needs order >= 1");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return FiniteGroup::validate_table(t, "Z" + std::to_string(n));
}

FiniteGroup dihedral_group(int order) {
  if (order < 2 || order % 2 != 0)
    throw parse_error("ParseError: dihedral group needs even order >= 2, got " +
                      std::to_string(order));
  const int m = order / 2;
  auto idx = [m](int rot, int flip) { return rot + flip * m; };
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < 2; ++l) {
          // (r^i s^j)(r^k s^l): moving s^j across r^k negates the exponent.
          const int rot = j == 0 ? (i + k) % m : ((i - k) % m + m) % m;
          t[idx(i, j)][idx(k, l)] = idx(rot, j ^ l);
        }
  return FiniteGroup::validate_table(t, "D" + std::to_string(m));
}

std::vector<int> symmetric_one_line(int n, int index) {
  std::vector<int> line(n);
  std::iota(line.begin(), line.end(), 1);
  for (int i = 0; i < index; ++i)
    if (!std::next_permutation(line.begin(), line.end()))
      throw std::out_of_range("IndexOutOfRange: S" + std::to_string(n) +
                              " has no element " + std::to_string(index));
  return line;
}

int symmetric_element_index(int n, const std::vector<int>& one_line) {
  std::vector<int> line(n);
  std::iota(line.begin(), line.end(), 1);
  int index = 0;
  do {
    if (line == one_line) return index;
    ++index;
  } while (std::next_permutation(line.begin(), line.end()));
  throw std::invalid_argument("NotAPermutation: bad one-line form for S" +
                              std::to_string(n));
}

FiniteGroup symmetric_group(int n) {
  if (n < 1 || n > 4)
    throw parse_error("ParseError: symmetric group supported for 1 <= n <= 4, got " +
                      std::to_string(n));
  std::vector<std::vector<int>> elems;
  std::vector<int> line(n);
  std::iota(line.begin(), line.end(), 1);
  do {
    elems.push_back(line);
  } while (std::next_permutation(line.begin(), line.end()));
  std::map<std::vector<int>, int> index_of;
  for (std::size_t i = 0; i < elems.size(); ++i) index_of[elems[i]] = static_cast<int>(i);

  const int order = static_cast<int>(elems.size());
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      std::vector<int> prod(n);
      for (int x = 0; x < n; ++x) prod[x] = elems[a][elems[b][x] - 1];
      t[a][b] = index_of[prod];
    }
  return FiniteGroup::validate_table(t, "S" + std::to_string(n));
}

FiniteGroup quaternion_group() {
  // Element 2*axis + sign with axes 1, i, j, k; so 0:1, 1:-1, 2:i, 3:-i, ...
  // axis_mul[a][b] gives (axis, extra sign) for the product of unit axes.
  static const int axis_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  // sign_mul uses the right-hand rules i*j = k, j*k = i, k*i = j.
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int ax = a / 2, bx = b / 2;
      const int sign = (a % 2) ^ (b % 2) ^ sign_mul[ax][bx];
      t[a][b] = 2 * axis_mul[ax][bx] + sign;
    }
  return FiniteGroup::validate_table(t, "Q8");
}

namespace {

std::string next_content_line(std::istream& in, bool required) {
  std::string line;
  while (std::getline(in, line)) {
    const auto pos = line.find('#');
    if (pos != std::string::npos) line.erase(pos);
    auto is_space = [](unsigned char c) { return std::isspace(c); };
    if (std::all_of(line.begin(), line.end(), is_space)) continue;
    return line;
  }
  if (required) throw parse_error("ParseError: unexpected end of group table");
  return {};
}

}  // namespace

FiniteGroup read_group_table(std::istream& in) {
  std::istringstream header(next_content_line(in, true));
  std::string keyword;
  int n = 0;
  if (!(header >> keyword >> n) || keyword != "order" || n < 1)
    throw parse_error("ParseError: expected \"order <n>\" header");

  std::string label;
  std::string line = next_content_line(in, true);
  {
    std::istringstream probe(line);
    std::string first;
    probe >> first;
    if (first == "label") {
      std::getline(probe, label);
      const auto start = label.find_first_not_of(" \t");
      label = start == std::string::npos ? std::string() : label.substr(start);
      line = next_content_line(in, true);
    }
  }

  std::vector<std::vector<int>> t;
  while (true) {
    std::istringstream row_in(line);
    std::vector<int> row;
    int v;
    while (row_in >> v) row.push_back(v);
    if (!row_in.eof()) throw parse_error("ParseError: non-numeric table entry");
    if (static_cast<int>(row.size()) != n)
      throw parse_error("ParseError: row " + std::to_string(t.size()) + " has " +
                        std::to_string(row.size()) + " entries, expected " +
                        std::to_string(n));
    t.push_back(std::move(row));
    if (static_cast<int>(t.size()) == n) break;
    line = next_content_line(in, true);
  }
  try {
    return FiniteGroup::validate_table(t, std::move(label));
  } catch (const std::invalid_argument& err) {
    throw parse_error(std::string("ParseError: ") + err.what());
  }
}

FiniteGroup read_group_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("ParseError: cannot open group table file " + path);
  return read_group_table(in);
}

void write_group_table(const FiniteGroup& g, std::ostream& out) {
  out << "order " << g.order() << "\n";
  if (!g.label().empty()) out << "label " << g.label() << "\n";
  for (int i = 0; i < g.order(); ++i) {
    for (int j = 0; j < g.order(); ++j) {
      if (j) out << ' ';
      out << g.mul(i, j);
    }
    out << "\n";
  }
}

namespace {

GroupSpec parse_spec_inner(const std::string& text);

std::string strip(const std::string& s) {
  const auto a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

int parse_param(const std::string& text, const std::string& family) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw parse_error("ParseError: bad parameter \"" + text + "\" for family " + family);
  }
}

GroupSpec parse_spec_inner(const std::string& raw) {
  const std::string text = strip(raw);
  if (text.rfind("product(", 0) == 0) {
    if (text.back() != ')') throw parse_error("ParseError: unterminated product spec");
    const std::string inner = text.substr(8, text.size() - 9);
    int depth = 0;
    std::size_t split = std::string::npos;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(') ++depth;
      else if (inner[i] == ')') --depth;
      else if (inner[i] == ',' && depth == 0) {
        split = i;
        break;
      }
    }
    if (split == std::string::npos)
      throw parse_error("ParseError: product spec needs two factors");
    GroupSpec spec;
    spec.family = GroupSpec::Family::product;
    spec.factors.push_back(parse_spec_inner(inner.substr(0, split)));
    spec.factors.push_back(parse_spec_inner(inner.substr(split + 1)));
    return spec;
  }

  const auto colon = text.find(':');
  const std::string family = colon == std::string::npos ? text : text.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
  GroupSpec spec;
  if (family == "cyclic") {
    spec.family = GroupSpec::Family::cyclic;
    spec.param = parse_param(rest, family);
  } else if (family == "dihedral") {
    spec.family = GroupSpec::Family::dihedral;
    spec.param = parse_param(rest, family);
  } else if (family == "symmetric") {
    spec.family = GroupSpec::Family::symmetric;
    spec.param = parse_param(rest, family);
  } else if (family == "quaternion") {
    spec.family = GroupSpec::Family::quaternion;
    spec.param = rest.empty() ? 8 : parse_param(rest, family);
    if (spec.param != 8)
      throw parse_error("ParseError: the quaternion family has order 8 only");
  } else if (family == "file") {
    if (rest.empty()) throw parse_error("ParseError: file spec needs a path");
    spec.family = GroupSpec::Family::file;
    spec.path = rest;
  } else {
    throw parse_error("UnknownFamily: \"" + family + "\"");
  }
  return spec;
}

}  // namespace

GroupSpec parse_group_spec(const std::string& text) { return parse_spec_inner(text); }

FiniteGroup realize_group(const GroupSpec& spec) {
  switch (spec.family) {
    case GroupSpec::Family::cyclic:
      return cyclic_group(spec.param);
    case GroupSpec::Family::dihedral:
      return dihedral_group(spec.param);
    case GroupSpec::Family::symmetric:
      return symmetric_group(spec.param);
    case GroupSpec::Family::quaternion:
      return quaternion_group();
    case GroupSpec::Family::product:
      return direct_product(realize_group(spec.factors[0]), realize_group(spec.factors[1]));
    case GroupSpec::Family::file: {
      FiniteGroup g = read_group_table_file(spec.path);
      if (g.label().empty()) g.set_label("file:" + spec.path);
      return g;
    }
  }
  throw parse_error("UnknownFamily: unreachable");
}

namespace {

// "(12)(34)" -> one-line form over {1..n}; cycles compose right-to-left to
// match the group's own product convention.
std::vector<int> one_line_from_cycles(const std::string& token, int n) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  while (i < token.size()) {
    if (std::isspace(static_cast<unsigned char>(token[i]))) {
      ++i;
      continue;
    }
    if (token[i] != '(') throw parse_error("ParseError: bad cycle token \"" + token + "\"");
    ++i;
    std::vector<int> cycle;
    while (i < token.size() && token[i] != ')') {
      const char c = token[i];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        const int v = c - '0';
        if (v < 1 || v > n)
          throw parse_error("ParseError: cycle point " + std::to_string(v) +
                            " outside 1.." + std::to_string(n));
        cycle.push_back(v);
      } else if (!std::isspace(static_cast<unsigned char>(c)) && c != ',') {
        throw parse_error("ParseError: bad cycle character '" + std::string(1, c) + "'");
      }
      ++i;
    }
    if (i == token.size()) throw parse_error("ParseError: unterminated cycle");
    ++i;  // ')'
    for (std::size_t a = 0; a < cycle.size(); ++a)
      for (std::size_t b = a + 1; b < cycle.size(); ++b)
        if (cycle[a] == cycle[b])
          throw parse_error("ParseError: repeated point in cycle \"" + token + "\"");
    if (cycle.size() >= 2) cycles.push_back(std::move(cycle));
  }
  std::vector<int> line(n);
  std::iota(line.begin(), line.end(), 1);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    std::vector<int> next = line;
    // Apply the cycle after what is already accumulated.
    std::vector<int> image(n + 1);
    std::iota(image.begin(), image.end(), 0);
    for (std::size_t k = 0; k < it->size(); ++k)
      image[(*it)[k]] = (*it)[(k + 1) % it->size()];
    for (int x = 0; x < n; ++x) next[x] = image[line[x]];
    line = next;
  }
  return line;
}

}  // namespace

std::vector<int> parse_subgroup_generators(const std::string& text,
                                           const GroupSpec& spec,
                                           const FiniteGroup& g) {
  std::vector<std::string> tokens;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if ((c == ',' || c == ' ') && depth == 0 &&
        !(c == ' ' && !current.empty() && current.front() == '(')) {
      if (!current.empty()) tokens.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (depth != 0) throw parse_error("ParseError: unbalanced parentheses in subgroup spec");
  if (!current.empty()) tokens.push_back(current);
  if (tokens.empty()) throw parse_error("ParseError: empty subgroup spec");

  std::vector<int> gens;
  for (const std::string& tok : tokens) {
    if (tok.front() == '(') {
      if (spec.family != GroupSpec::Family::symmetric)
        throw parse_error("ParseError: cycle notation is only valid for the symmetric family");
      gens.push_back(symmetric_element_index(spec.param, one_line_from_cycles(tok, spec.param)));
    } else {
      const int v = parse_param(tok, "subgroup");
      if (v < 0 || v >= g.order())
        throw parse_error("ParseError: subgroup generator " + std::to_string(v) +
                          " outside 0.." + std::to_string(g.order() - 1));
      gens.push_back(v);
    }
  }
  return gens;
}

std::vector<FiniteGroup> catalog_groups_of_order(int order) {
  std::vector<FiniteGroup> result;
  if (order < 1) return result;
  result.push_back(cyclic_group(order));
  if (order >= 6 && order % 2 == 0) result.push_back(dihedral_group(order));
  if (order == 6) result.push_back(symmetric_group(3));
  if (order == 24) result.push_back(symmetric_group(4));
  if (order == 8) result.push_back(quaternion_group());
  for (int a = 2; a * a <= order; ++a)
    if (order % a == 0) result.push_back(direct_product(cyclic_group(a), cyclic_group(order / a)));
  return result;
}

}  // namespace qsrg
