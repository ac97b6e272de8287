#include "sepmon/groups/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace sepmon::groups {

namespace {

std::string join_summary(const std::vector<std::string>& items) {
  std::ostringstream os;
  os << "invalid group (" << items.size() << " violation" << (items.size() == 1 ? "" : "s") << ")";
  std::size_t shown = std::min<std::size_t>(items.size(), 8);
  for (std::size_t i = 0; i < shown; ++i) os << "; " << items[i];
  if (shown < items.size()) os << "; ... and " << items.size() - shown << " more";
  return os.str();
}

// Closure of gens inside a group given by its table.
std::vector<bool> closure(const std::vector<std::vector<Element>>& table, const std::vector<Element>& gens) {
  std::vector<bool> in(table.size(), false);
  std::deque<Element> queue{0};
  in[0] = true;
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    for (Element s : gens) {
      Element y = table[x][s];
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  }
  return in;
}

std::vector<Element> greedy_generators(const std::vector<std::vector<Element>>& table) {
  std::vector<Element> gens;
  std::vector<bool> in = closure(table, gens);
  for (Element e = 0; e < table.size(); ++e) {
    if (in[e]) continue;
    gens.push_back(e);
    in = closure(table, gens);
  }
  return gens;
}

}  // namespace

GroupError::GroupError(std::vector<std::string> violations)
    : std::invalid_argument(join_summary(violations)), violations_(std::move(violations)) {}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

std::string cycle_notation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::ostringstream os;
  for (std::uint32_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    os << "(";
    std::uint32_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      os << (first ? "" : " ") << j + 1;
      first = false;
      j = p[j];
    }
    os << ")";
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

GroupPtr FiniteGroup::from_permutations(const std::vector<Permutation>& generators, std::size_t size_cap) {
  std::size_t degree = generators.empty() ? 0 : generators.front().size();
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const auto& g = generators[k];
    if (g.size() != degree) {
      throw std::invalid_argument("generator " + std::to_string(k) + " has degree " + std::to_string(g.size()) +
                                  ", expected " + std::to_string(degree));
    }
    std::vector<bool> hit(degree, false);
    for (auto v : g) {
      if (v >= degree || hit[v]) {
        throw std::invalid_argument("generator " + std::to_string(k) + " is not a permutation");
      }
      hit[v] = true;
    }
  }

  Permutation id(degree);
  for (std::uint32_t i = 0; i < degree; ++i) id[i] = i;

  std::vector<Permutation> elems{id};
  std::map<Permutation, Element> index{{id, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& s : generators) {
      Permutation y = compose(elems[head], s);
      if (index.count(y)) continue;
      if (elems.size() >= size_cap) {
        throw GroupError({"closure exceeds size cap " + std::to_string(size_cap)});
      }
      index.emplace(y, static_cast<Element>(elems.size()));
      elems.push_back(std::move(y));
    }
  }

  std::size_t n = elems.size();
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a][b] = index.at(compose(elems[a], elems[b]));
  }

  std::shared_ptr<FiniteGroup> g(new FiniteGroup());
  g->table_ = std::move(table);
  for (const auto& p : elems) g->labels_.push_back(cycle_notation(p));
  g->perms_ = elems;
  g->perm_index_ = std::move(index);

  std::vector<Element> gens;
  for (const auto& s : generators) {
    Element e = g->perm_index_.at(s);
    if (e != identity && std::find(gens.begin(), gens.end(), e) == gens.end()) gens.push_back(e);
  }
  g->finish(std::move(gens));
  return g;
}

std::vector<std::string> FiniteGroup::axiom_violations(const std::vector<std::vector<Element>>& table) {
  std::vector<std::string> v;
  const std::size_t n = table.size();
  if (n == 0) {
    v.push_back("empty table");
    return v;
  }
  bool in_range = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      v.push_back("row " + std::to_string(i) + " has length " + std::to_string(table[i].size()) + ", expected " +
                  std::to_string(n));
      in_range = false;
      continue;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] >= n) {
        v.push_back("entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + std::to_string(table[i][j]) +
                    " out of range");
        in_range = false;
      }
    }
  }
  if (!in_range) return v;

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> row_at(n, -1), col_at(n, -1);
    for (std::size_t j = 0; j < n; ++j) {
      Element r = table[i][j];
      if (row_at[r] >= 0) {
        v.push_back("row " + std::to_string(i) + " repeats " + std::to_string(r) + " at columns " +
                    std::to_string(row_at[r]) + " and " + std::to_string(j));
      } else {
        row_at[r] = static_cast<int>(j);
      }
      Element c = table[j][i];
      if (col_at[c] >= 0) {
        v.push_back("column " + std::to_string(i) + " repeats " + std::to_string(c) + " at rows " +
                    std::to_string(col_at[c]) + " and " + std::to_string(j));
      } else {
        col_at[c] = static_cast<int>(j);
      }
    }
  }

  std::optional<std::size_t> identity_at;
  for (std::size_t e = 0; e < n && !identity_at; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) identity_at = e;
  }
  if (!identity_at) {
    v.push_back("no identity element");
  } else if (*identity_at != 0) {
    v.push_back("identity is element " + std::to_string(*identity_at) + ", expected element 0");
  }

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          v.push_back("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                      std::to_string(c) + ")");
        }
      }
    }
  }
  return v;
}

GroupPtr FiniteGroup::from_cayley_table(const std::vector<std::vector<Element>>& table,
                                        std::vector<std::string> labels) {
  auto violations = axiom_violations(table);
  if (!labels.empty() && labels.size() != table.size()) {
    violations.push_back("labels has " + std::to_string(labels.size()) + " entries, expected " +
                         std::to_string(table.size()));
  }
  if (!violations.empty()) throw GroupError(std::move(violations));
  if (labels.empty()) {
    for (std::size_t i = 0; i < table.size(); ++i) labels.push_back("g" + std::to_string(i));
  }
  return from_trusted_table(table, std::move(labels));
}

GroupPtr FiniteGroup::from_trusted_table(std::vector<std::vector<Element>> table, std::vector<std::string> labels,
                                         std::vector<Permutation> perms) {
  std::shared_ptr<FiniteGroup> g(new FiniteGroup());
  g->table_ = std::move(table);
  g->labels_ = std::move(labels);
  g->perms_ = std::move(perms);
  for (std::size_t i = 0; i < g->perms_.size(); ++i) g->perm_index_.emplace(g->perms_[i], static_cast<Element>(i));
  g->finish(greedy_generators(g->table_));
  return g;
}

void FiniteGroup::finish(std::vector<Element> generators) {
  const std::size_t n = table_.size();
  inverse_.assign(n, 0);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (table_[a][b] == identity) {
        inverse_[a] = b;
        break;
      }
    }
  }
  generators_ = std::move(generators);
}

std::optional<Element> FiniteGroup::find(const Permutation& p) const {
  auto it = perm_index_.find(p);
  if (it == perm_index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace sepmon::groups
