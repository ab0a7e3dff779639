#include "ncat/limits.hpp"

#include <stdexcept>

#include "ncat/iso.hpp"

namespace ncat {

Cell pair_name(const Cell& a, const Cell& b) { return "(" + a + "|" + b + ")"; }

std::optional<std::pair<Cell, Cell>> split_pair_name(const Cell& c) {
  if (c.size() < 3 || c.front() != '(' || c.back() != ')') return std::nullopt;
  // The separator is the '|' at bracket depth zero inside the outer parens.
  int depth = 0;
  for (std::size_t i = 1; i + 1 < c.size(); ++i) {
    if (c[i] == '(') ++depth;
    else if (c[i] == ')') --depth;
    else if (c[i] == '|' && depth == 0)
      return std::pair{c.substr(1, i - 1), c.substr(i + 1, c.size() - i - 2)};
  }
  return std::nullopt;
}

NCat terminal(int n) {
  NCat t;
  t.n = n;
  t.cells.assign(static_cast<std::size_t>(n) + 1, {"*"});
  t.src.resize(static_cast<std::size_t>(n) + 1);
  t.tgt.resize(static_cast<std::size_t>(n) + 1);
  t.idn.resize(static_cast<std::size_t>(n) + 1);
  for (int l = 1; l <= n; ++l) {
    t.src[static_cast<std::size_t>(l)]["*"] = "*";
    t.tgt[static_cast<std::size_t>(l)]["*"] = "*";
    t.idn[static_cast<std::size_t>(l)]["*"] = "*";
    for (int i = 0; i < l; ++i) t.comp[{l, i}][{"*", "*"}] = "*";
  }
  return t;
}

NFunctor unique_to_terminal(const NCat& a) {
  NFunctor f;
  f.dom = a;
  f.cod = terminal(a.n);
  f.maps.resize(static_cast<std::size_t>(a.n) + 1);
  for (int l = 0; l <= a.n; ++l)
    for (const Cell& c : a.cells[static_cast<std::size_t>(l)])
      f.maps[static_cast<std::size_t>(l)][c] = "*";
  return f;
}

PullbackResult pullback(const NFunctor& f, const NFunctor& g) {
  if (!(f.cod == g.cod)) throw std::invalid_argument("pullback: codomain mismatch");
  const NCat& A = f.dom;
  const NCat& B = g.dom;
  const int n = A.n;

  PullbackResult r;
  NCat& P = r.apex;
  P.n = n;
  P.cells.resize(static_cast<std::size_t>(n) + 1);
  P.src.resize(static_cast<std::size_t>(n) + 1);
  P.tgt.resize(static_cast<std::size_t>(n) + 1);
  P.idn.resize(static_cast<std::size_t>(n) + 1);
  r.p1.dom = r.p2.dom = NCat{};  // filled below
  r.p1.cod = A;
  r.p2.cod = B;
  r.p1.maps.resize(static_cast<std::size_t>(n) + 1);
  r.p2.maps.resize(static_cast<std::size_t>(n) + 1);

  for (int l = 0; l <= n; ++l) {
    for (const Cell& a : A.cells[static_cast<std::size_t>(l)]) {
      for (const Cell& b : B.cells[static_cast<std::size_t>(l)]) {
        if (f.apply(l, a) != g.apply(l, b)) continue;
        Cell p = pair_name(a, b);
        P.cells[static_cast<std::size_t>(l)].push_back(p);
        r.p1.maps[static_cast<std::size_t>(l)][p] = a;
        r.p2.maps[static_cast<std::size_t>(l)][p] = b;
        if (l >= 1) {
          P.src[static_cast<std::size_t>(l)][p] = pair_name(A.src_of(l, a), B.src_of(l, b));
          P.tgt[static_cast<std::size_t>(l)][p] = pair_name(A.tgt_of(l, a), B.tgt_of(l, b));
        }
      }
    }
    if (l >= 1)
      for (const Cell& p : P.cells[static_cast<std::size_t>(l - 1)]) {
        auto ab = *split_pair_name(p);
        P.idn[static_cast<std::size_t>(l)][p] =
            pair_name(A.idn_of(l, ab.first), B.idn_of(l, ab.second));
      }
  }
  for (int j = 1; j <= n; ++j) {
    for (int i = 0; i < j; ++i) {
      CompTable& tab = P.comp[{j, i}];
      for (const Cell& p2 : P.cells[static_cast<std::size_t>(j)]) {
        for (const Cell& p1 : P.cells[static_cast<std::size_t>(j)]) {
          if (!P.composable(j, i, p2, p1)) continue;
          auto x2 = *split_pair_name(p2);
          auto x1 = *split_pair_name(p1);
          auto ca = A.compose_cells(j, i, x2.first, x1.first);
          auto cb = B.compose_cells(j, i, x2.second, x1.second);
          if (!ca || !cb)
            throw std::logic_error("pullback: componentwise composite missing");
          tab[{p2, p1}] = pair_name(*ca, *cb);
        }
      }
    }
  }
  r.p1.dom = P;
  r.p2.dom = P;
  return r;
}

ProductResult product(const NCat& a, const NCat& b) {
  auto pb = pullback(unique_to_terminal(a), unique_to_terminal(b));
  return ProductResult{std::move(pb.apex), std::move(pb.p1), std::move(pb.p2)};
}

static Cell tag_name(std::size_t k, const Cell& c) { return std::to_string(k) + ":" + c; }

CoproductResult coproduct(const std::vector<NCat>& summands) {
  if (summands.empty()) throw std::invalid_argument("coproduct: empty list");
  const int n = summands.front().n;
  for (const NCat& s : summands)
    if (s.n != n) throw std::invalid_argument("coproduct: mixed level counts");

  CoproductResult r;
  NCat& S = r.sum;
  S.n = n;
  S.cells.resize(static_cast<std::size_t>(n) + 1);
  S.src.resize(static_cast<std::size_t>(n) + 1);
  S.tgt.resize(static_cast<std::size_t>(n) + 1);
  S.idn.resize(static_cast<std::size_t>(n) + 1);
  for (std::size_t k = 0; k < summands.size(); ++k) {
    const NCat& A = summands[k];
    NFunctor inj;
    inj.cod = NCat{};  // filled after S is complete
    inj.dom = A;
    inj.maps.resize(static_cast<std::size_t>(n) + 1);
    for (int l = 0; l <= n; ++l) {
      for (const Cell& c : A.cells[static_cast<std::size_t>(l)]) {
        Cell t = tag_name(k, c);
        S.cells[static_cast<std::size_t>(l)].push_back(t);
        inj.maps[static_cast<std::size_t>(l)][c] = t;
        if (l >= 1) {
          S.src[static_cast<std::size_t>(l)][t] = tag_name(k, A.src_of(l, c));
          S.tgt[static_cast<std::size_t>(l)][t] = tag_name(k, A.tgt_of(l, c));
        }
      }
      if (l >= 1)
        for (const Cell& c : A.cells[static_cast<std::size_t>(l - 1)])
          S.idn[static_cast<std::size_t>(l)][tag_name(k, c)] = tag_name(k, A.idn_of(l, c));
    }
    for (const auto& [ji, tab] : A.comp)
      for (const auto& [gf, h] : tab)
        S.comp[ji][{tag_name(k, gf.first), tag_name(k, gf.second)}] = tag_name(k, h);
    r.injections.push_back(std::move(inj));
  }
  for (NFunctor& inj : r.injections) inj.cod = S;
  return r;
}

NFunctor pullback_mediator(const PullbackResult& pb, const NFunctor& u, const NFunctor& v) {
  if (!(u.dom == v.dom)) throw std::invalid_argument("pullback_mediator: cone apexes differ");
  NFunctor m;
  m.dom = u.dom;
  m.cod = pb.apex;
  m.maps.resize(u.maps.size());
  for (int l = 0; l <= u.dom.n; ++l)
    for (const Cell& c : u.dom.cells[static_cast<std::size_t>(l)])
      m.maps[static_cast<std::size_t>(l)][c] = pair_name(u.apply(l, c), v.apply(l, c));
  return m;
}

bool check_pullback_universal(const NFunctor& f, const NFunctor& g, const PullbackResult& pb,
                              const std::vector<NCat>& test_apexes) {
  for (const NCat& Q : test_apexes) {
    std::vector<NFunctor> into_a = all_functors(Q, f.dom);
    std::vector<NFunctor> into_b = all_functors(Q, g.dom);
    for (const NFunctor& u : into_a) {
      for (const NFunctor& v : into_b) {
        if (!(compose(f, u) == compose(g, v))) continue;
        std::size_t count = 0;
        enumerate_functors(Q, pb.apex, [&](const NFunctor& h) {
          if (compose(pb.p1, h) == u && compose(pb.p2, h) == v) ++count;
          return count < 2;
        });
        if (count != 1) return false;
      }
    }
  }
  return true;
}

}  // namespace ncat
