#include "tll/term.hpp"

#include <functional>

namespace tll {

std::string SortRef::str() const {
  switch (k) {
    case K::U: return "U";
    case K::L: return "L";
    case K::Var: return "s" + std::to_string(id);
    case K::Hole: return "_";
  }
  return "?";
}

static TermPtr node(Term&& t) { return std::make_shared<Term>(std::move(t)); }

TermPtr mk_var(uint32_t i, Span sp) {
  Term t; t.tag = Tag::Var; t.num = i; t.span = sp; return node(std::move(t));
}
TermPtr mk_sort(SortRef s, Span sp) {
  Term t; t.tag = Tag::Sortt; t.sort = s; t.span = sp; return node(std::move(t));
}
TermPtr mk_sort(Sort s, Span sp) { return mk_sort(SortRef::of(s), sp); }
TermPtr mk_pi(int mode, SortRef t, std::string x, TermPtr dom, TermPtr cod, Span sp) {
  Term n; n.tag = Tag::Pi; n.mode = uint8_t(mode); n.sort = t; n.name = std::move(x);
  n.kids = {std::move(dom), std::move(cod)}; n.span = sp; return node(std::move(n));
}
TermPtr mk_lam(int mode, SortRef t, std::string x, TermPtr ann, TermPtr body, Span sp) {
  Term n; n.tag = Tag::Lam; n.mode = uint8_t(mode); n.sort = t; n.name = std::move(x);
  n.kids = {std::move(ann), std::move(body)}; n.span = sp; return node(std::move(n));
}
TermPtr mk_app(TermPtr f, TermPtr a, Span sp) {
  Term n; n.tag = Tag::App; n.kids = {std::move(f), std::move(a)}; n.span = sp;
  return node(std::move(n));
}
TermPtr mk_box(Span sp) { Term t; t.tag = Tag::Box; t.span = sp; return node(std::move(t)); }
TermPtr mk_loc(uint32_t l, Span sp) {
  Term t; t.tag = Tag::Loc; t.num = l; t.span = sp; return node(std::move(t));
}
TermPtr mk_hole(uint32_t id, Span sp) {
  Term t; t.tag = Tag::Hole; t.num = id; t.span = sp; return node(std::move(t));
}
TermPtr mk_meta(uint32_t id, Span sp) {
  Term t; t.tag = Tag::Meta; t.num = id; t.span = sp; return node(std::move(t));
}
TermPtr mk_id(TermPtr ty, TermPtr lhs, TermPtr rhs, Span sp) {
  Term n; n.tag = Tag::Id; n.kids = {std::move(ty), std::move(lhs), std::move(rhs)};
  n.span = sp; return node(std::move(n));
}
TermPtr mk_refl(TermPtr m, Span sp) {
  Term n; n.tag = Tag::Refl; n.kids = {std::move(m)}; n.span = sp; return node(std::move(n));
}
TermPtr mk_idelim(std::string x, std::string p, TermPtr motive, TermPtr h, TermPtr proof,
                  Span sp) {
  Term n; n.tag = Tag::IdElim; n.bnames = {std::move(x), std::move(p)};
  n.kids = {std::move(motive), std::move(h), std::move(proof)}; n.span = sp;
  return node(std::move(n));
}
TermPtr mk_sig(int mode, SortRef t, std::string x, TermPtr dom, TermPtr cod, Span sp) {
  Term n; n.tag = Tag::Sig; n.mode = uint8_t(mode); n.sort = t; n.name = std::move(x);
  n.kids = {std::move(dom), std::move(cod)}; n.span = sp; return node(std::move(n));
}
TermPtr mk_pair(int mode, SortRef t, TermPtr fst, TermPtr snd, Span sp) {
  Term n; n.tag = Tag::Pair; n.mode = uint8_t(mode); n.sort = t;
  n.kids = {std::move(fst), std::move(snd)}; n.span = sp; return node(std::move(n));
}
TermPtr mk_sigelim(int mode, std::string z, TermPtr motive, TermPtr scrut, std::string x,
                   std::string y, TermPtr branch, Span sp) {
  Term n; n.tag = Tag::SigElim; n.mode = uint8_t(mode);
  n.bnames = {std::move(z), std::move(x), std::move(y)};
  n.kids = {std::move(motive), std::move(scrut), std::move(branch)}; n.span = sp;
  return node(std::move(n));
}
TermPtr mk_with(SortRef t, TermPtr lhs, TermPtr rhs, Span sp) {
  Term n; n.tag = Tag::With; n.sort = t; n.kids = {std::move(lhs), std::move(rhs)};
  n.span = sp; return node(std::move(n));
}
TermPtr mk_apair(SortRef t, TermPtr lhs, TermPtr rhs, Span sp) {
  Term n; n.tag = Tag::APair; n.sort = t; n.kids = {std::move(lhs), std::move(rhs)};
  n.span = sp; return node(std::move(n));
}
TermPtr mk_projl(TermPtr m, Span sp) {
  Term n; n.tag = Tag::ProjL; n.kids = {std::move(m)}; n.span = sp; return node(std::move(n));
}
TermPtr mk_projr(TermPtr m, Span sp) {
  Term n; n.tag = Tag::ProjR; n.kids = {std::move(m)}; n.span = sp; return node(std::move(n));
}
TermPtr mk_ind(std::string name, std::vector<SortRef> sorts, std::vector<TermPtr> args,
               Span sp) {
  Term n; n.tag = Tag::Ind; n.name = std::move(name); n.sorts = std::move(sorts);
  n.kids = std::move(args); n.span = sp; return node(std::move(n));
}
TermPtr mk_ctor(std::string name, std::vector<SortRef> sorts, std::vector<TermPtr> args,
                Span sp) {
  Term n; n.tag = Tag::Ctor; n.name = std::move(name); n.sorts = std::move(sorts);
  n.kids = std::move(args); n.span = sp; return node(std::move(n));
}
TermPtr mk_match(std::string z, TermPtr motive, TermPtr scrut, std::vector<MatchBranch> brs,
                 Span sp) {
  Term n; n.tag = Tag::Match; n.bnames = {std::move(z)};
  n.kids = {std::move(motive), std::move(scrut)}; n.branches = std::move(brs); n.span = sp;
  return node(std::move(n));
}
TermPtr mk_def(std::string name, std::vector<SortRef> sorts, Span sp) {
  Term n; n.tag = Tag::Def; n.name = std::move(name); n.sorts = std::move(sorts); n.span = sp;
  return node(std::move(n));
}
TermPtr mk_name(std::string name, std::vector<SortRef> sorts, Span sp) {
  Term n; n.tag = Tag::Name; n.name = std::move(name); n.sorts = std::move(sorts); n.span = sp;
  return node(std::move(n));
}

int kid_binders(const Term& t, size_t i) {
  switch (t.tag) {
    case Tag::Pi:
    case Tag::Lam:
    case Tag::Sig: return i == 1 ? 1 : 0;
    case Tag::IdElim: return i == 0 ? 2 : 0;
    case Tag::SigElim: return i == 0 ? 1 : (i == 2 ? 2 : 0);
    case Tag::Match: return i == 0 ? 1 : 0;
    default: return 0;
  }
}

bool equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->tag != b->tag || a->mode != b->mode || a->num != b->num) return false;
  if (!(a->sort == b->sort)) return false;
  switch (a->tag) {
    case Tag::Ind:
    case Tag::Ctor:
    case Tag::Def:
    case Tag::Name:
      if (a->name != b->name || a->sorts != b->sorts) return false;
      break;
    default: break;
  }
  if (a->kids.size() != b->kids.size()) return false;
  for (size_t i = 0; i < a->kids.size(); i++)
    if (!equal(a->kids[i], b->kids[i])) return false;
  if (a->branches.size() != b->branches.size()) return false;
  for (size_t i = 0; i < a->branches.size(); i++) {
    const auto& x = a->branches[i];
    const auto& y = b->branches[i];
    if (x.ctor != y.ctor || x.fields.size() != y.fields.size()) return false;
    if (!equal(x.body, y.body)) return false;
  }
  return true;
}

size_t term_size(const TermPtr& t) {
  if (!t) return 0;
  size_t n = 1;
  for (const auto& k : t->kids) n += term_size(k);
  for (const auto& b : t->branches) n += term_size(b.body);
  return n;
}

bool has_free_above(const TermPtr& t, uint32_t depth) {
  if (!t) return false;
  if (t->tag == Tag::Var) return t->num >= depth;
  for (size_t i = 0; i < t->kids.size(); i++)
    if (has_free_above(t->kids[i], depth + uint32_t(kid_binders(*t, i)))) return true;
  for (const auto& b : t->branches)
    if (has_free_above(b.body, depth + uint32_t(b.fields.size()))) return true;
  return false;
}

bool contains_tag(const TermPtr& t, Tag tag) {
  if (!t) return false;
  if (t->tag == tag) return true;
  for (const auto& k : t->kids)
    if (contains_tag(k, tag)) return true;
  for (const auto& b : t->branches)
    if (contains_tag(b.body, tag)) return true;
  return false;
}

// Generic rebuilding map over kids with binder-depth bookkeeping. `fn` is
// called on leaves the traversal does not descend into (Var handling).
template <typename F>
static TermPtr map_term(const TermPtr& t, uint32_t depth, const F& fn) {
  TermPtr out = fn(t, depth);
  if (out) return out;
  bool changed = false;
  std::vector<TermPtr> kids;
  kids.reserve(t->kids.size());
  for (size_t i = 0; i < t->kids.size(); i++) {
    TermPtr k = map_term(t->kids[i], depth + uint32_t(kid_binders(*t, i)), fn);
    changed |= (k != t->kids[i]);
    kids.push_back(std::move(k));
  }
  std::vector<MatchBranch> brs;
  brs.reserve(t->branches.size());
  for (const auto& b : t->branches) {
    TermPtr body = map_term(b.body, depth + uint32_t(b.fields.size()), fn);
    changed |= (body != b.body);
    brs.push_back({b.ctor, b.fields, std::move(body)});
  }
  if (!changed) return t;
  Term n = *t;
  n.kids = std::move(kids);
  n.branches = std::move(brs);
  return std::make_shared<Term>(std::move(n));
}

TermPtr shift(const TermPtr& t, int d, uint32_t cutoff) {
  if (d == 0) return t;
  return map_term(t, cutoff, [d](const TermPtr& n, uint32_t depth) -> TermPtr {
    if (n->tag != Tag::Var) return nullptr;
    if (n->num < depth) return n;
    return mk_var(uint32_t(int(n->num) + d), n->span);
  });
}

TermPtr instantiate(const TermPtr& body, std::span<const TermPtr> args) {
  const uint32_t k = uint32_t(args.size());
  if (k == 0) return body;
  return map_term(body, 0, [&](const TermPtr& n, uint32_t depth) -> TermPtr {
    if (n->tag != Tag::Var) return nullptr;
    if (n->num < depth) return n;
    uint32_t i = n->num - depth;
    if (i < k) return shift(args[k - 1 - i], int(depth));
    return mk_var(n->num - k, n->span);
  });
}

TermPtr instantiate1(const TermPtr& body, const TermPtr& arg) {
  const TermPtr as[1] = {arg};
  return instantiate(body, as);
}

static SortRef zonk_sort(SortRef s, const MetaSolutions& sol) {
  if (s.k == SortRef::K::Hole && s.id < sol.sorts.size() && sol.sorts[s.id])
    return SortRef::of(*sol.sorts[s.id]);
  return s;
}

TermPtr zonk(const TermPtr& t, const MetaSolutions& sol) {
  TermPtr mapped = map_term(t, 0, [&](const TermPtr& n, uint32_t depth) -> TermPtr {
    if (n->tag == Tag::Meta && n->num < sol.terms.size() && sol.terms[n->num])
      return zonk(shift(sol.terms[n->num], int(depth)), sol);
    return nullptr;
  });
  // second pass for sort holes (cheap: rebuild only when a hole resolves)
  return map_term(mapped, 0, [&](const TermPtr& n, uint32_t) -> TermPtr {
    bool touch = !(zonk_sort(n->sort, sol) == n->sort);
    for (auto& s : n->sorts) touch |= !(zonk_sort(s, sol) == s);
    if (!touch) return nullptr;
    Term out = *n;
    out.sort = zonk_sort(out.sort, sol);
    for (auto& s : out.sorts) s = zonk_sort(s, sol);
    std::vector<TermPtr> kids;
    for (size_t i = 0; i < n->kids.size(); i++) kids.push_back(zonk(n->kids[i], sol));
    out.kids = std::move(kids);
    std::vector<MatchBranch> brs;
    for (const auto& b : n->branches) brs.push_back({b.ctor, b.fields, zonk(b.body, sol)});
    out.branches = std::move(brs);
    return std::make_shared<Term>(std::move(out));
  });
}

bool has_unsolved(const TermPtr& t) {
  if (!t) return false;
  if (t->tag == Tag::Meta || t->tag == Tag::Hole) return true;
  if (t->sort.k == SortRef::K::Hole) return true;
  for (const auto& s : t->sorts)
    if (s.k == SortRef::K::Hole) return true;
  for (const auto& k : t->kids)
    if (has_unsolved(k)) return true;
  for (const auto& b : t->branches)
    if (has_unsolved(b.body)) return true;
  return false;
}

static SortRef subst_sort(SortRef s, std::span<const Sort> assignment) {
  if (s.k == SortRef::K::Var && s.id < assignment.size())
    return SortRef::of(assignment[s.id]);
  return s;
}

TermPtr subst_sorts(const TermPtr& t, std::span<const Sort> assignment) {
  return map_term(t, 0, [&](const TermPtr& n, uint32_t) -> TermPtr {
    bool touch = !(subst_sort(n->sort, assignment) == n->sort);
    for (auto& s : n->sorts) touch |= !(subst_sort(s, assignment) == s);
    if (!touch) return nullptr;
    Term out = *n;
    out.sort = subst_sort(out.sort, assignment);
    for (auto& s : out.sorts) s = subst_sort(s, assignment);
    std::vector<TermPtr> kids;
    for (size_t i = 0; i < n->kids.size(); i++)
      kids.push_back(subst_sorts(n->kids[i], assignment));
    out.kids = std::move(kids);
    std::vector<MatchBranch> brs;
    for (const auto& b : n->branches)
      brs.push_back({b.ctor, b.fields, subst_sorts(b.body, assignment)});
    out.branches = std::move(brs);
    return std::make_shared<Term>(std::move(out));
  });
}

}  // namespace tll
