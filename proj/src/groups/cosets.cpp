#include "sepmon/groups/cosets.hpp"

#include <algorithm>
#include <deque>

namespace sepmon::groups {

Element Subgroup::to_local(Element parent_element) const {
  int l = data_->local.at(parent_element);
  if (l < 0) throw std::out_of_range("element " + std::to_string(parent_element) + " is not in the subgroup");
  return static_cast<Element>(l);
}

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<Element>& gens) {
  for (Element s : gens) {
    if (s >= g->order()) throw std::out_of_range("subgroup generator " + std::to_string(s) + " out of range");
  }
  std::vector<bool> in(g->order(), false);
  in[FiniteGroup::identity] = true;
  std::deque<Element> queue{FiniteGroup::identity};
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    for (Element s : gens) {
      Element y = g->mul(x, s);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  }

  auto data = std::make_shared<Subgroup::Data>();
  data->parent = g;
  data->local.assign(g->order(), -1);
  for (Element e = 0; e < g->order(); ++e) {
    if (!in[e]) continue;
    data->local[e] = static_cast<int>(data->elements.size());
    data->elements.push_back(e);
  }

  const std::size_t n = data->elements.size();
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  std::vector<std::string> labels;
  std::vector<Permutation> perms;
  for (std::size_t a = 0; a < n; ++a) {
    Element pa = data->elements[a];
    labels.push_back(g->label(pa));
    if (g->has_permutations()) perms.push_back(g->permutation(pa));
    for (std::size_t b = 0; b < n; ++b) {
      table[a][b] = static_cast<Element>(data->local[g->mul(pa, data->elements[b])]);
    }
  }
  data->group = FiniteGroup::from_trusted_table(std::move(table), std::move(labels), std::move(perms));

  Subgroup h;
  h.data_ = std::move(data);
  return h;
}

CosetSpace CosetSpace::right_cosets(const GroupPtr& g, const Subgroup& h) {
  if (h.parent() != g) throw std::invalid_argument("right_cosets: subgroup of a different group");
  auto data = std::make_shared<Data>();
  data->group = g;
  data->subgroup = h;
  const std::size_t n = g->order();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  data->coset_of.assign(n, unset);
  data->factor.resize(n);
  for (Element x = 0; x < n; ++x) {
    if (data->coset_of[x] != unset) continue;
    const std::size_t c = data->reps.size();
    data->reps.push_back(x);
    std::vector<Element> members;
    for (Element hh : h.elements()) {
      Element y = g->mul(hh, x);
      data->coset_of[y] = c;
      data->factor[y] = Factorization{hh, x, c};
      members.push_back(y);
    }
    std::sort(members.begin(), members.end());
    data->cosets.push_back(std::move(members));
  }
  CosetSpace out;
  out.data_ = std::move(data);
  return out;
}

std::string CosetSpace::coset_label(std::size_t i) const {
  Element r = data_->reps.at(i);
  return r == FiniteGroup::identity ? "H" : "H" + data_->group->label(r);
}

}  // namespace sepmon::groups
