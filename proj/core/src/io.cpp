#include "orbikt/io.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

#include "orbikt/error.hpp"

namespace orbikt {

namespace {

constexpr const char* kModule = "cli";

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  fail(ErrorKind::ParseError, kModule, "line " + std::to_string(line) + ": " + what);
}

struct Line {
  std::size_t number;
  std::vector<std::string> words;
};

/// Non-empty lines split on whitespace, comments removed.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    std::string w;
    while (words >> w) line.words.push_back(w);
    if (!line.words.empty()) out.push_back(std::move(line));
  }
  return out;
}

std::size_t to_index(const std::string& word, std::size_t line) {
  if (word.empty() || !std::all_of(word.begin(), word.end(), [](char c) { return c >= '0' && c <= '9'; }))
    parse_error(line, "expected a non-negative integer, got '" + word + "'");
  try {
    return std::stoul(word);
  } catch (const std::exception&) {
    parse_error(line, "integer out of range: '" + word + "'");
  }
}

std::vector<std::uint32_t> to_indices(const std::vector<std::string>& words, std::size_t from, std::size_t line) {
  std::vector<std::uint32_t> out;
  for (std::size_t i = from; i < words.size(); ++i) out.push_back(static_cast<std::uint32_t>(to_index(words[i], line)));
  return out;
}

std::pair<Element, std::vector<Vertex>> parse_act(const Line& l) {
  // act <g> : <images>, with the colon optionally attached to the element.
  std::vector<std::string> w;
  for (std::size_t i = 1; i < l.words.size(); ++i) {
    std::string s = l.words[i];
    if (s == ":") continue;
    if (!s.empty() && s.back() == ':') s.pop_back();
    w.push_back(s);
  }
  if (w.empty()) parse_error(l.number, "act line needs an element and a permutation");
  const auto g = static_cast<Element>(to_index(w[0], l.number));
  return {g, to_indices(w, 1, l.number)};
}

std::vector<std::string> spec_tokens(std::string_view spec) {
  std::string s(spec);
  for (char& c : s)
    if (c == '(' || c == ')' || c == ',' || c == ':') c = ' ';
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

GroupPtr builtin_from(const std::vector<std::string>& tok, std::size_t& pos, std::size_t max_order) {
  if (pos >= tok.size()) fail(ErrorKind::ParseError, kModule, "incomplete builtin group spec");
  const std::string head = tok[pos++];
  auto number = [&]() {
    if (pos >= tok.size()) fail(ErrorKind::ParseError, kModule, "'" + head + "' needs a size");
    const std::size_t n = to_index(tok[pos++], 1);
    if (n == 0) fail(ErrorKind::ParseError, kModule, "'" + head + "' needs a positive size");
    return n;
  };
  GroupPtr g;
  if (head == "trivial") g = trivial_group();
  else if (head == "cyclic") {
    const std::size_t n = number();
    if (n > max_order) fail(ErrorKind::BoundExceeded, kModule, "group order exceeds bound " + std::to_string(max_order));
    g = cyclic_group(n);
  } else if (head == "dihedral") {
    const std::size_t n = number();
    if (2 * n > max_order) fail(ErrorKind::BoundExceeded, kModule, "group order exceeds bound " + std::to_string(max_order));
    g = dihedral_group(n);
  } else if (head == "product") {
    GroupPtr a = builtin_from(tok, pos, max_order);
    GroupPtr b = builtin_from(tok, pos, max_order);
    if (a->order() * b->order() > max_order)
      fail(ErrorKind::BoundExceeded, kModule, "group order exceeds bound " + std::to_string(max_order));
    g = direct_product(*a, *b);
  } else {
    fail(ErrorKind::ParseError, kModule, "unknown builtin group '" + head + "'");
  }
  return g;
}

}  // namespace

GroupPtr parse_group(std::string_view text, std::size_t max_order) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines[0].words.size() != 2 || lines[0].words[0] != "group")
    parse_error(lines.empty() ? 1 : lines[0].number, "expected header 'group <n>'");
  const std::size_t n = to_index(lines[0].words[1], lines[0].number);
  if (n == 0) parse_error(lines[0].number, "group order must be positive");
  if (n > max_order) fail(ErrorKind::BoundExceeded, kModule, "group order " + std::to_string(n) + " exceeds bound " + std::to_string(max_order));

  std::size_t at = 1;
  std::vector<std::string> names;
  if (at < lines.size() && lines[at].words[0] == "names") {
    names.assign(lines[at].words.begin() + 1, lines[at].words.end());
    if (names.size() != n) parse_error(lines[at].number, "expected " + std::to_string(n) + " names");
    ++at;
  }
  if (at >= lines.size()) parse_error(lines.back().number, "expected 'table' or 'perm <k>'");
  const Line& kind = lines[at++];
  if (kind.words[0] == "table") {
    if (kind.words.size() != 1) parse_error(kind.number, "'table' takes no arguments");
    if (lines.size() - at != n) parse_error(kind.number, "expected " + std::to_string(n) + " table rows");
    std::vector<std::vector<Element>> table;
    for (; at < lines.size(); ++at) {
      auto row = to_indices(lines[at].words, 0, lines[at].number);
      if (row.size() != n) parse_error(lines[at].number, "table row must have " + std::to_string(n) + " entries");
      table.emplace_back(row.begin(), row.end());
    }
    return make_group(FiniteGroup(std::move(table), std::move(names)));
  }
  if (kind.words[0] == "perm") {
    if (kind.words.size() != 2) parse_error(kind.number, "expected 'perm <k>'");
    const std::size_t k = to_index(kind.words[1], kind.number);
    std::vector<std::vector<std::uint32_t>> gens;
    for (; at < lines.size(); ++at) {
      auto p = to_indices(lines[at].words, 0, lines[at].number);
      if (p.size() != k) parse_error(lines[at].number, "permutation must have " + std::to_string(k) + " entries");
      gens.push_back(std::move(p));
    }
    FiniteGroup g = FiniteGroup::from_permutations(k, gens, max_order);
    if (g.order() != n)
      fail(ErrorKind::InvalidInput, kModule,
           "generators produce a group of order " + std::to_string(g.order()) + ", header says " + std::to_string(n));
    if (!names.empty()) g = FiniteGroup(g.table(), std::move(names));
    return make_group(std::move(g));
  }
  parse_error(kind.number, "expected 'table' or 'perm <k>', got '" + kind.words[0] + "'");
}

GroupPtr builtin_group(std::string_view spec, std::size_t max_order) {
  const auto tok = spec_tokens(spec);
  std::size_t pos = 0;
  GroupPtr g = builtin_from(tok, pos, max_order);
  if (pos != tok.size()) fail(ErrorKind::ParseError, kModule, "trailing text in builtin group spec: '" + tok[pos] + "'");
  return g;
}

ComplexFile parse_complex(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines[0].words.size() != 2 || lines[0].words[0] != "vertices")
    parse_error(lines.empty() ? 1 : lines[0].number, "expected header 'vertices <n>'");
  const std::size_t n = to_index(lines[0].words[1], lines[0].number);
  std::vector<Simplex> maximal;
  ComplexFile out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.words[0] == "simplex") {
      auto s = to_indices(l.words, 1, l.number);
      if (s.empty()) parse_error(l.number, "empty simplex");
      for (auto v : s)
        if (v >= n) parse_error(l.number, "vertex " + std::to_string(v) + " out of range");
      std::sort(s.begin(), s.end());
      if (std::adjacent_find(s.begin(), s.end()) != s.end()) parse_error(l.number, "repeated vertex in simplex");
      maximal.push_back(std::move(s));
    } else if (l.words[0] == "act") {
      out.generators.push_back(parse_act(l));
    } else {
      parse_error(l.number, "unknown directive '" + l.words[0] + "'");
    }
  }
  out.complex = SimplicialComplex::from_maximal(n, std::move(maximal));
  return out;
}

std::vector<std::pair<Element, std::vector<Vertex>>> parse_action(std::string_view text) {
  std::vector<std::pair<Element, std::vector<Vertex>>> out;
  for (const auto& l : tokenize(text)) {
    if (l.words[0] != "act") parse_error(l.number, "expected an 'act' line");
    out.push_back(parse_act(l));
  }
  return out;
}

GSimplicialComplex make_action(ComplexFile file, const GroupPtr& group) {
  for (const auto& [g, perm] : file.generators)
    if (g >= group->order())
      fail(ErrorKind::InvalidInput, kModule, "act names element " + std::to_string(g) + " outside the group");
  if (file.generators.empty()) return GSimplicialComplex::trivial_action(std::move(file.complex), group);
  return GSimplicialComplex::from_generators(std::move(file.complex), group, file.generators);
}

std::string write_group(const FiniteGroup& g) {
  std::ostringstream out;
  out << "group " << g.order() << "\nnames";
  for (Element e = 0; e < g.order(); ++e) out << ' ' << g.name(e);
  out << "\ntable\n";
  for (const auto& row : g.table()) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
    out << '\n';
  }
  return out.str();
}

std::string write_complex(const GSimplicialComplex& x) {
  std::ostringstream out;
  const auto& c = x.complex();
  out << "vertices " << c.vertex_count() << '\n';
  for (const auto& s : c.maximal_simplices()) {
    out << "simplex";
    for (Vertex v : s) out << ' ' << v;
    out << '\n';
  }
  // Greedy generating set: add any element not yet reached.
  const auto& g = *x.group();
  std::vector<bool> reached(g.order(), false);
  reached[g.identity()] = true;
  std::vector<Element> span{g.identity()};
  for (Element e = 0; e < g.order(); ++e) {
    if (reached[e]) continue;
    out << "act " << e << " :";
    for (Vertex v : x.vertex_action()[e]) out << ' ' << v;
    out << '\n';
    span.push_back(e);
    reached[e] = true;
    for (std::size_t i = 0; i < span.size(); ++i)
      for (std::size_t j = 0; j < span.size(); ++j) {
        const Element p = g.mul(span[i], span[j]);
        if (!reached[p]) {
          reached[p] = true;
          span.push_back(p);
        }
      }
  }
  return out.str();
}

Filtration parse_filtration(std::string_view text) {
  static const std::regex node(R"(\(\s*(\d+)\s*,\s*(\d+)\s*\))");
  Filtration f;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = raw.find(':');
    if (colon == std::string::npos) parse_error(number, "expected 'step: (stratum, irrep) ...'");
    std::istringstream head(raw.substr(0, colon));
    std::string word, extra;
    head >> word;
    if (word != "step") parse_error(number, "line must start with 'step'");
    if (head >> extra) to_index(extra, number);
    std::string rest = raw.substr(colon + 1);
    std::vector<PrimNode> step;
    for (auto it = std::sregex_iterator(rest.begin(), rest.end(), node); it != std::sregex_iterator(); ++it)
      step.push_back({to_index((*it)[1], number), to_index((*it)[2], number)});
    const std::string leftover = std::regex_replace(rest, node, "");
    if (leftover.find_first_not_of(" \t\r") != std::string::npos)
      parse_error(number, "unexpected text '" + leftover + "'");
    f.steps.push_back(std::move(step));
  }
  return f;
}

std::vector<Element> parse_elements(const FiniteGroup& g, const std::vector<std::string>& tokens) {
  std::vector<Element> out;
  for (const auto& t : tokens) {
    if (auto e = g.find(t)) {
      out.push_back(*e);
      continue;
    }
    std::string s = t;
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream in(s);
    std::string w;
    while (in >> w) {
      if (auto e = g.find(w)) {
        out.push_back(*e);
      } else if (std::all_of(w.begin(), w.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        const std::size_t i = to_index(w, 1);
        if (i >= g.order()) fail(ErrorKind::InvalidInput, kModule, "element index " + w + " out of range");
        out.push_back(static_cast<Element>(i));
      } else {
        fail(ErrorKind::ParseError, kModule, "unknown group element '" + w + "'");
      }
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::InvalidInput, kModule, "cannot read file '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace orbikt
