#include "parcov/instances.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <sstream>

#include "parcov/errors.hpp"

namespace parcov {

namespace {

std::string str(long long v) { return std::to_string(v); }

// Splits text into lines, keeping 1-based numbering.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool next(std::string_view& line) {
    if (pos_ >= text_.size()) return false;
    std::size_t end = text_.find('\n', pos_);
    if (end == std::string_view::npos) end = text_.size();
    line = text_.substr(pos_, end - pos_);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos_ = end + 1;
    ++number_;
    return true;
  }

  std::size_t number() const { return number_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t number_ = 0;
};

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

long long to_int(std::string_view token, std::size_t line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected integer, got '" + std::string(token) + "'");
  }
  return value;
}

bool is_comment(const std::vector<std::string_view>& tokens) {
  return tokens.empty() || tokens[0] == "c" || tokens[0][0] == 'c' || tokens[0][0] == '%';
}

// Header "p <format> <a> <b>".
std::pair<long long, long long> parse_header(const std::vector<std::string_view>& tokens, std::string_view format,
                                             std::size_t line) {
  if (tokens.size() != 4 || tokens[0] != "p" || tokens[1] != format) {
    throw ParseError(line, "malformed header, expected 'p " + std::string(format) + " <a> <b>'");
  }
  long long a = to_int(tokens[2], line);
  long long b = to_int(tokens[3], line);
  if (a < 0 || b < 0) throw ParseError(line, "negative count in header");
  return {a, b};
}

}  // namespace

// ---------------------------------------------------------------------------
// SetSystem

SetSystem::SetSystem(int n, std::vector<std::vector<int>> sets) : n_(n), sets_(std::move(sets)) {
  if (n < 0) throw InputError("negative ground set size");
  std::vector<int> frequency(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    auto& s = sets_[i];
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int x : s) {
      if (x < 0 || x >= n) {
        throw InputError("set " + str(static_cast<long long>(i)) + ": element " + str(x) + " out of range");
      }
      ++frequency[static_cast<std::size_t>(x)];
    }
    max_cardinality_ = std::max(max_cardinality_, static_cast<int>(s.size()));
  }
  for (int f : frequency) max_frequency_ = std::max(max_frequency_, f);
}

int SetSystem::coverage(std::span<const int> indices) const {
  std::vector<char> hit(static_cast<std::size_t>(n_), 0);
  int count = 0;
  for (int i : indices) {
    for (int x : set(i)) {
      if (!hit[static_cast<std::size_t>(x)]) {
        hit[static_cast<std::size_t>(x)] = 1;
        ++count;
      }
    }
  }
  return count;
}

int SetSystem::union_size() const {
  std::vector<int> all(static_cast<std::size_t>(m()));
  for (int i = 0; i < m(); ++i) all[static_cast<std::size_t>(i)] = i;
  return coverage(all);
}

void validate_query(const SetSystem& sys, const CoverQuery& q) {
  if (q.k < 0 || q.k > sys.m()) throw InputError("k=" + str(q.k) + " outside [0, m=" + str(sys.m()) + "]");
  if (q.p < 0 || q.p > sys.n()) throw InputError("p=" + str(q.p) + " outside [0, n=" + str(sys.n()) + "]");
}

// ---------------------------------------------------------------------------
// CnfFormula

CnfFormula::CnfFormula(int n_vars, std::vector<Clause> clauses)
    : n_vars_(n_vars),
      clauses_(std::move(clauses)),
      occ_pos_(static_cast<std::size_t>(std::max(n_vars, 0)), 0),
      occ_neg_(static_cast<std::size_t>(std::max(n_vars, 0)), 0) {
  if (n_vars < 0) throw InputError("negative variable count");
  for (std::size_t c = 0; c < clauses_.size(); ++c) {
    auto& clause = clauses_[c];
    for (const Literal& lit : clause) {
      if (lit.var < 0 || lit.var >= n_vars) {
        throw InputError("clause " + str(static_cast<long long>(c)) + ": literal out of range");
      }
    }
    std::sort(clause.begin(), clause.end(), [](const Literal& a, const Literal& b) {
      return a.var != b.var ? a.var < b.var : a.positive < b.positive;
    });
    clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
    for (std::size_t j = 1; j < clause.size(); ++j) {
      if (clause[j].var == clause[j - 1].var) {
        throw InputError("clause " + str(static_cast<long long>(c)) + ": tautological clause");
      }
    }
    for (const Literal& lit : clause) {
      ++(lit.positive ? occ_pos_ : occ_neg_)[static_cast<std::size_t>(lit.var)];
    }
  }
  for (int v = 0; v < n_vars_; ++v) {
    max_frequency_ = std::max(max_frequency_, occ_pos_[static_cast<std::size_t>(v)] + occ_neg_[static_cast<std::size_t>(v)]);
  }
}

int CnfFormula::occ_pos(int var, std::span<const int> subset) const {
  int count = 0;
  for (int c : subset) {
    for (const Literal& lit : clause(c)) count += (lit.var == var && lit.positive);
  }
  return count;
}

int CnfFormula::occ_neg(int var, std::span<const int> subset) const {
  int count = 0;
  for (int c : subset) {
    for (const Literal& lit : clause(c)) count += (lit.var == var && !lit.positive);
  }
  return count;
}

int CnfFormula::count_satisfied(std::span<const int> true_vars) const {
  std::vector<char> value(static_cast<std::size_t>(n_vars_), 0);
  for (int v : true_vars) value.at(static_cast<std::size_t>(v)) = 1;
  int count = 0;
  for (const Clause& clause : clauses_) {
    for (const Literal& lit : clause) {
      if (static_cast<bool>(value[static_cast<std::size_t>(lit.var)]) == lit.positive) {
        ++count;
        break;
      }
    }
  }
  return count;
}

int CnfFormula::count_negative_satisfied() const { return count_satisfied({}); }

void validate_query(const CnfFormula& phi, const SatQuery& q) {
  if (q.k < 0 || q.k > phi.n_vars()) throw InputError("k=" + str(q.k) + " outside [0, n_vars=" + str(phi.n_vars()) + "]");
  if (q.p < 0 || q.p > phi.m()) throw InputError("p=" + str(q.p) + " outside [0, m=" + str(phi.m()) + "]");
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw InputError("negative vertex count");
  for (auto& [u, v] : edges_) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw InputError("edge endpoint out of range");
    if (u == v) throw InputError("self-loop on vertex " + str(u + 1));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  adjacency_.assign(static_cast<std::size_t>(n), {});
  for (auto [u, v] : edges_) {
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

int Graph::max_degree() const noexcept {
  int best = 0;
  for (const auto& nbrs : adjacency_) best = std::max(best, static_cast<int>(nbrs.size()));
  return best;
}

// ---------------------------------------------------------------------------
// Parsers and writers

SetSystem parse_set_system(std::string_view text) {
  LineReader reader(text);
  std::string_view line;
  bool have_header = false;
  long long n = 0, m = 0;
  std::size_t header_line = 0;
  std::vector<std::vector<int>> sets;
  while (reader.next(line)) {
    auto tokens = tokenize(line);
    if (is_comment(tokens)) continue;
    if (!have_header) {
      std::tie(n, m) = parse_header(tokens, "psc", reader.number());
      have_header = true;
      header_line = reader.number();
      continue;
    }
    if (tokens[0] != "s") throw ParseError(reader.number(), "expected set line starting with 's'");
    if (static_cast<long long>(sets.size()) == m) {
      throw ParseError(reader.number(), "declared " + str(m) + " sets, found more");
    }
    std::vector<int> set;
    for (std::size_t t = 1; t < tokens.size(); ++t) {
      long long e = to_int(tokens[t], reader.number());
      if (e < 1 || e > n) throw ParseError(reader.number(), "element " + str(e) + " out of range");
      set.push_back(static_cast<int>(e - 1));
    }
    sets.push_back(std::move(set));
  }
  if (!have_header) throw ParseError(reader.number() + 1, "missing header 'p psc <n> <m>'");
  if (static_cast<long long>(sets.size()) != m) {
    throw ParseError(header_line, "declared " + str(m) + " sets, found " + str(static_cast<long long>(sets.size())));
  }
  return SetSystem(static_cast<int>(n), std::move(sets));
}

std::string write_set_system(const SetSystem& sys) {
  std::ostringstream out;
  out << "p psc " << sys.n() << ' ' << sys.m() << '\n';
  for (const auto& s : sys.sets()) {
    out << 's';
    for (int x : s) out << ' ' << x + 1;
    out << '\n';
  }
  return out.str();
}

CnfFormula parse_dimacs_cnf(std::string_view text) {
  LineReader reader(text);
  std::string_view line;
  bool have_header = false;
  long long n_vars = 0, m = 0;
  std::size_t header_line = 0;
  std::vector<Clause> clauses;
  Clause current;
  while (reader.next(line)) {
    auto tokens = tokenize(line);
    if (is_comment(tokens)) {
      if (!tokens.empty() && tokens[0][0] == '%') break;
      continue;
    }
    if (!have_header) {
      std::tie(n_vars, m) = parse_header(tokens, "cnf", reader.number());
      have_header = true;
      header_line = reader.number();
      continue;
    }
    for (auto token : tokens) {
      long long lit = to_int(token, reader.number());
      if (lit == 0) {
        for (std::size_t j = 0; j < current.size(); ++j) {
          for (std::size_t i = 0; i < j; ++i) {
            if (current[i].var == current[j].var && current[i].positive != current[j].positive) {
              throw ParseError(reader.number(), "tautological clause");
            }
          }
        }
        clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      long long var = lit < 0 ? -lit : lit;
      if (var > n_vars) throw ParseError(reader.number(), "literal out of range: " + std::string(token));
      current.push_back(Literal{static_cast<int>(var - 1), lit > 0});
    }
  }
  if (!have_header) throw ParseError(reader.number() + 1, "missing header 'p cnf <n> <m>'");
  if (!current.empty()) throw ParseError(reader.number(), "last clause not terminated by 0");
  if (static_cast<long long>(clauses.size()) != m) {
    throw ParseError(header_line,
                     "declared " + str(m) + " clauses, found " + str(static_cast<long long>(clauses.size())));
  }
  return CnfFormula(static_cast<int>(n_vars), std::move(clauses));
}

std::string write_dimacs_cnf(const CnfFormula& phi) {
  std::ostringstream out;
  out << "p cnf " << phi.n_vars() << ' ' << phi.m() << '\n';
  for (const Clause& clause : phi.clauses()) {
    for (const Literal& lit : clause) out << (lit.positive ? lit.var + 1 : -(lit.var + 1)) << ' ';
    out << "0\n";
  }
  return out.str();
}

Graph parse_dimacs_graph(std::string_view text) {
  LineReader reader(text);
  std::string_view line;
  bool have_header = false;
  long long n = 0, m = 0;
  std::size_t header_line = 0;
  std::vector<std::pair<int, int>> edges;
  while (reader.next(line)) {
    auto tokens = tokenize(line);
    if (is_comment(tokens)) continue;
    if (!have_header) {
      std::tie(n, m) = parse_header(tokens, "edge", reader.number());
      have_header = true;
      header_line = reader.number();
      continue;
    }
    if (tokens[0] != "e" || tokens.size() != 3) throw ParseError(reader.number(), "expected 'e <u> <v>'");
    long long u = to_int(tokens[1], reader.number());
    long long v = to_int(tokens[2], reader.number());
    if (u < 1 || u > n || v < 1 || v > n) throw ParseError(reader.number(), "vertex out of range");
    if (u == v) throw ParseError(reader.number(), "self-loop on vertex " + str(u));
    edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
  }
  if (!have_header) throw ParseError(reader.number() + 1, "missing header 'p edge <n> <m>'");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(header_line, "declared " + str(m) + " edges, found " + str(static_cast<long long>(edges.size())));
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string write_dimacs_graph(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.n() << ' ' << g.edges().size() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Generators

namespace {

// Draws `count` distinct items uniformly from `pool` (partial Fisher-Yates).
std::vector<int> sample(std::vector<int> pool, int count, std::mt19937_64& rng) {
  for (int i = 0; i < count; ++i) {
    std::uniform_int_distribution<std::size_t> pick(static_cast<std::size_t>(i), pool.size() - 1);
    std::swap(pool[static_cast<std::size_t>(i)], pool[pick(rng)]);
  }
  pool.resize(static_cast<std::size_t>(count));
  std::sort(pool.begin(), pool.end());
  return pool;
}

// Shared core: m groups of distinct items from {0..universe-1}, each of size
// 1..size_max, every item used at most f_max times.
std::vector<std::vector<int>> draw_groups(int universe, int m, int size_max, int f_max, std::mt19937_64& rng) {
  std::vector<int> used(static_cast<std::size_t>(universe), 0);
  long long capacity = static_cast<long long>(f_max) * universe;
  std::vector<std::vector<int>> groups;
  groups.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    std::vector<int> available;
    for (int x = 0; x < universe; ++x) {
      if (used[static_cast<std::size_t>(x)] < f_max) available.push_back(x);
    }
    long long still_needed = m - i - 1;
    long long limit = std::min<long long>({size_max, capacity - still_needed, static_cast<long long>(available.size())});
    std::uniform_int_distribution<long long> size_dist(1, limit);
    int size = static_cast<int>(size_dist(rng));
    auto group = sample(std::move(available), size, rng);
    for (int x : group) ++used[static_cast<std::size_t>(x)];
    capacity -= size;
    groups.push_back(std::move(group));
  }
  return groups;
}

}  // namespace

SetSystem gen_set_system(int n, int m, int delta_max, int f_max, std::uint64_t seed) {
  if (n < 1 || m < 0) throw InputError("gen_set_system: need n >= 1 and m >= 0");
  if (delta_max < 1 || delta_max > n) throw InputError("gen_set_system: need 1 <= delta_max <= n");
  if (f_max < 1) throw InputError("gen_set_system: need f_max >= 1");
  if (static_cast<long long>(m) > static_cast<long long>(f_max) * n) {
    throw InputError("gen_set_system: " + str(m) + " non-empty sets need more than f_max*n = " +
                     str(static_cast<long long>(f_max) * n) + " memberships");
  }
  std::mt19937_64 rng(seed);
  return SetSystem(n, draw_groups(n, m, delta_max, f_max, rng));
}

CnfFormula gen_cnf(int n_vars, int m, int clause_len_max, int f_max, std::uint64_t seed) {
  if (n_vars < 1 || m < 0) throw InputError("gen_cnf: need n_vars >= 1 and m >= 0");
  if (clause_len_max < 1 || clause_len_max > n_vars) throw InputError("gen_cnf: need 1 <= clause_len_max <= n_vars");
  if (f_max < 1) throw InputError("gen_cnf: need f_max >= 1");
  if (static_cast<long long>(m) > static_cast<long long>(f_max) * n_vars) {
    throw InputError("gen_cnf: " + str(m) + " non-empty clauses need more than f_max*n_vars = " +
                     str(static_cast<long long>(f_max) * n_vars) + " occurrences");
  }
  std::mt19937_64 rng(seed);
  auto groups = draw_groups(n_vars, m, clause_len_max, f_max, rng);
  std::bernoulli_distribution sign(0.5);
  std::vector<Clause> clauses;
  clauses.reserve(groups.size());
  for (const auto& vars : groups) {
    Clause clause;
    for (int v : vars) clause.push_back(Literal{v, sign(rng)});
    clauses.push_back(std::move(clause));
  }
  return CnfFormula(n_vars, std::move(clauses));
}

Graph gen_graph(int n, double edge_prob, std::uint64_t seed) {
  if (n < 0) throw InputError("gen_graph: negative vertex count");
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) throw InputError("gen_graph: edge probability outside [0,1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(edge_prob);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace parcov
