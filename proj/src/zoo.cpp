#include "og4/zoo.hpp"

#include <algorithm>
#include <numeric>

namespace og4 {

bool is_prime(long long v) {
  if (v < 2)
    return false;
  for (long long d = 2; d * d <= v; ++d)
    if (v % d == 0)
      return false;
  return true;
}

namespace {

int mod(long long v, int p) {
  long long r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

int mod_pow(long long base, long long exp, int p) {
  long long r = 1, b = mod(base, p);
  while (exp > 0) {
    if (exp & 1)
      r = r * b % p;
    b = b * b % p;
    exp >>= 1;
  }
  return static_cast<int>(r);
}

int mod_inv(int v, int p) { return mod_pow(v, p - 2, p); }

} // namespace

PSL2Element PSL2Element::make(int p, std::array<int, 4> entries) {
  PSL2Element e;
  e.p = p;
  for (int i = 0; i < 4; ++i)
    e.m[i] = mod(entries[i], p);
  long long det =
      mod(static_cast<long long>(e.m[0]) * e.m[3] - static_cast<long long>(e.m[1]) * e.m[2], p);
  if (det != 1)
    throw Error(ErrorKind::BadParameters, "PSL2Element: determinant is not 1");
  // canonical sign: first nonzero entry in {1, ..., (p-1)/2}
  for (int i = 0; i < 4; ++i) {
    if (e.m[i] == 0)
      continue;
    if (e.m[i] > (p - 1) / 2)
      for (int j = 0; j < 4; ++j)
        e.m[j] = mod(-e.m[j], p);
    break;
  }
  return e;
}

PSL2Element PSL2Element::multiplied_by(const PSL2Element &o) const {
  if (p != o.p)
    throw Error(ErrorKind::BadParameters, "PSL2Element: field mismatch");
  std::array<int, 4> r{
      mod(static_cast<long long>(m[0]) * o.m[0] + static_cast<long long>(m[1]) * o.m[2], p),
      mod(static_cast<long long>(m[0]) * o.m[1] + static_cast<long long>(m[1]) * o.m[3], p),
      mod(static_cast<long long>(m[2]) * o.m[0] + static_cast<long long>(m[3]) * o.m[2], p),
      mod(static_cast<long long>(m[2]) * o.m[1] + static_cast<long long>(m[3]) * o.m[3], p)};
  return make(p, r);
}

PSL2Element PSL2Element::inverse() const {
  return make(p, {m[3], mod(-m[1], p), mod(-m[2], p), m[0]});
}

std::vector<PSL2Element> enumerate_psl2(int p) {
  std::vector<PSL2Element> out;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < p; ++d) {
          if (mod(static_cast<long long>(a) * d - static_cast<long long>(b) * c, p) != 1)
            continue;
          PSL2Element e = PSL2Element::make(p, {a, b, c, d});
          if (std::find(out.begin(), out.end(), e) == out.end())
            out.push_back(e);
        }
  return out;
}

Permutation psl2_permutation(const PSL2Element &e, bool transpose_convention) {
  int p = e.p;
  int a = e.m[0], b = e.m[1], c = e.m[2], d = e.m[3];
  if (transpose_convention) {
    std::swap(b, c);
  }
  // row-vector action: infinity -> a/b, x -> (a x + c) / (b x + d)
  std::vector<Point> im(static_cast<std::size_t>(p) + 1);
  auto enc = [&](int proj) { return static_cast<Point>(proj + 1); }; // finite x
  const Point INF = 0;
  im[INF] = b == 0 ? INF : enc(mod(static_cast<long long>(a) * mod_inv(b, p), p));
  for (int x = 0; x < p; ++x) {
    int den = mod(static_cast<long long>(b) * x + d, p);
    int num = mod(static_cast<long long>(a) * x + c, p);
    im[enc(x)] = den == 0 ? INF : enc(mod(static_cast<long long>(num) * mod_inv(den, p), p));
  }
  return Permutation(std::move(im));
}

GeneratingPair psl2_on_projective_line(int p) {
  if (!is_prime(p) || p < 5)
    throw Error(ErrorKind::BadParameters,
                "psl2_on_projective_line: p must be a prime >= 5");
  PSL2Element ma = PSL2Element::make(p, {0, 1, -1, 0});
  PSL2Element mb = PSL2Element::make(p, {0, 1, -1, 1});
  for (bool transpose : {false, true}) {
    Permutation a = psl2_permutation(ma, transpose);
    Permutation b = psl2_permutation(mb, transpose);
    Permutation ab = compose(a, b);
    Permutation ab2 = compose(ab, b);
    if (a.element_order() == 2 && b.element_order() == 3 &&
        ab.element_order() == static_cast<Order>(p) &&
        ab2.element_order() == static_cast<Order>(p)) {
      GeneratingPair pair{PermGroup(static_cast<Point>(p + 1), {a, b}), a, b, {}};
      pair.certified_properties = {"order(a)=2", "order(b)=3",
                                   "order(ab)=" + std::to_string(p),
                                   "order(ab^2)=" + std::to_string(p)};
      return pair;
    }
  }
  throw Error(ErrorKind::AssertionFailed,
              "psl2_on_projective_line: action convention check failed");
}

GeneratingPair alt_with_pair(unsigned n, AltPairKind kind) {
  if (n < 5 || n % 2 == 0)
    throw Error(ErrorKind::BadParameters, "alt_with_pair: n must be odd and >= 5");
  std::vector<Point> full(n);
  std::iota(full.begin(), full.end(), Point{0});
  Permutation b = Permutation::from_cycles(n, {full});
  GeneratingPair pair{PermGroup(1, {}), Permutation(n), b, {}};
  if (kind == AltPairKind::k1_pair) {
    Permutation a = Permutation::from_cycles(n, {{0, 1}, {2, 3}});
    Permutation ab = compose(a, b);
    if (a.element_order() != 2)
      throw Error(ErrorKind::AssertionFailed, "alt_with_pair: order(a) != 2");
    if (b.element_order() % 2 == 0 || ab.element_order() % 2 == 0)
      throw Error(ErrorKind::AssertionFailed,
                  "alt_with_pair: b or ab has even order");
    pair = GeneratingPair{PermGroup(n, {a, b}), a, b,
                          {"order(a)=2", "order(b) odd", "order(ab) odd"}};
  } else {
    Permutation a = Permutation::from_cycles(n, {{0, 1, 2}});
    if (a.element_order() % 2 == 0 || b.element_order() % 2 == 0)
      throw Error(ErrorKind::AssertionFailed, "alt_with_pair: even generator order");
    pair = GeneratingPair{PermGroup(n, {a, b}), a, b,
                          {"order(a)=3", "order(b)=" + std::to_string(n)}};
    if (n <= 9) {
      // no conjugation by Sym(n) swaps a and b
      std::vector<Point> im(n);
      std::iota(im.begin(), im.end(), Point{0});
      do {
        Permutation x{std::vector<Point>(im)};
        if (conjugated(a, x) == b && conjugated(b, x) == a)
          throw Error(ErrorKind::AssertionFailed,
                      "alt_with_pair: an automorphism swaps a and b");
      } while (std::next_permutation(im.begin(), im.end()));
      pair.certified_properties.push_back("no-swap: verified");
    } else {
      pair.certified_properties.push_back("no-swap: unverified-paper-claim");
    }
  }
  return pair;
}

Permutation find_inverting_conjugator(unsigned n, const Permutation &a,
                                      const Permutation &b) {
  // any solution of b^x = b^-1 lies in the coset <b> * reversal, so only n
  // candidates need checking
  std::vector<Point> rev(n);
  for (unsigned i = 0; i < n; ++i)
    rev[i] = static_cast<Point>(n - 1 - i);
  Permutation rho{std::move(rev)};
  Permutation binv = b.inverse(), ainv = a.inverse();
  Permutation bk(n);
  for (unsigned k = 0; k < n; ++k) {
    Permutation x = compose(bk, rho);
    if (conjugated(b, x) == binv && conjugated(a, x) == ainv)
      return x;
    bk = compose(bk, b);
  }
  throw Error(ErrorKind::AssertionFailed,
              "find_inverting_conjugator: no element inverts both generators");
}

PermGroup cyclic_and_elementary(int p, int k) {
  if (!is_prime(p) || p % 2 == 0)
    throw Error(ErrorKind::BadParameters, "cyclic_and_elementary: p must be an odd prime");
  if (k == 1) {
    std::vector<Point> im(p);
    for (int x = 0; x < p; ++x)
      im[x] = static_cast<Point>((x + 1) % p);
    return PermGroup(static_cast<Point>(p), {Permutation(std::move(im))});
  }
  if (k == 2) {
    Point n = static_cast<Point>(p) * static_cast<Point>(p);
    std::vector<Point> e1(n), e2(n);
    for (int x = 0; x < p; ++x)
      for (int y = 0; y < p; ++y) {
        e1[x * p + y] = static_cast<Point>(((x + 1) % p) * p + y);
        e2[x * p + y] = static_cast<Point>(x * p + (y + 1) % p);
      }
    return PermGroup(n, {Permutation(std::move(e1)), Permutation(std::move(e2))});
  }
  throw Error(ErrorKind::BadParameters, "cyclic_and_elementary: k must be 1 or 2");
}

Permutation eval_word(const std::string &word, const Permutation &a,
                      const Permutation &b) {
  Permutation r(a.degree());
  for (char ch : word) {
    switch (ch) {
    case 'a':
      r = compose(r, a);
      break;
    case 'b':
      r = compose(r, b);
      break;
    case 'A':
      r = compose(r, a.inverse());
      break;
    case 'B':
      r = compose(r, b.inverse());
      break;
    default:
      throw Error(ErrorKind::BadParameters, "eval_word: bad letter");
    }
  }
  return r;
}

namespace {

struct WreathSpec {
  std::string construction;
  unsigned k;
  std::vector<std::string> phi_tuple;
  std::vector<std::vector<Point>> phi_top;
  std::vector<std::string> y_tuple;
  std::vector<std::vector<Point>> h1_top;
  std::optional<std::vector<std::string>> h2_tuple;
  std::vector<std::vector<Point>> h2_top;
  std::vector<std::string> y1_tuple;
  std::optional<std::vector<std::string>> y2_tuple;
};

WreathConstructionData build_wreath(const WreathSpec &spec, int p) {
  if (!is_prime(p) || p < 7)
    throw Error(ErrorKind::BadParameters,
                spec.construction + ": p must be a prime >= 7");
  WreathConstructionData data;
  data.construction = spec.construction;
  data.p = p;
  data.k = spec.k;
  data.t_pair = psl2_on_projective_line(p);
  data.block_degree = data.t_pair.group.degree();
  const Permutation &a = data.t_pair.a;
  const Permutation &b = data.t_pair.b;
  unsigned k = spec.k;
  Point d = data.block_degree;

  auto realize = [&](const std::vector<std::string> &tuple,
                     const std::vector<std::vector<Point>> &top) {
    std::vector<Permutation> comps;
    comps.reserve(k);
    for (const auto &w : tuple)
      comps.push_back(eval_word(w, a, b));
    return wreath_element(d, k, comps, Permutation::from_cycles(k, top));
  };

  data.phi = realize(spec.phi_tuple, spec.phi_top);
  data.y = realize(spec.y_tuple, {});
  std::vector<std::string> all_a(k, "a");
  data.h1 = realize(all_a, spec.h1_top);

  // transcription integrity: the printed tuples match recomputation
  if (compose(data.phi, data.phi) != data.y)
    throw Error(ErrorKind::AssertionFailed,
                spec.construction + ": phi^2 does not match the printed y");
  if (spec.h2_tuple) {
    data.h2 = realize(*spec.h2_tuple, spec.h2_top);
    if (conjugated(data.h1, data.phi) != *data.h2)
      throw Error(ErrorKind::AssertionFailed,
                  spec.construction + ": h1^phi does not match the printed h2");
  }
  data.y1 = realize(spec.y1_tuple, {});
  if (conjugated(data.y, data.h1) != data.y1)
    throw Error(ErrorKind::AssertionFailed,
                spec.construction + ": y^h1 does not match the printed y1");
  if (spec.y2_tuple) {
    data.y2 = realize(*spec.y2_tuple, {});
    if (conjugated(data.y, *data.h2) != *data.y2)
      throw Error(ErrorKind::AssertionFailed,
                  spec.construction + ": y^h2 does not match the printed y2");
  }

  std::vector<Permutation> v_gens{data.h1};
  if (data.h2)
    v_gens.push_back(*data.h2);
  data.V = PermGroup(d * k, v_gens);
  Order v_order = data.h2 ? 4 : 2;
  if (data.V.order(v_order) != v_order)
    throw Error(ErrorKind::AssertionFailed, spec.construction + ": |V| unexpected");
  if (data.h2 && compose(data.h1, *data.h2) != compose(*data.h2, data.h1))
    throw Error(ErrorKind::AssertionFailed,
                spec.construction + ": h1 and h2 do not commute");

  std::vector<Permutation> h_gens = direct_power_with_top(data.t_pair.group, k, {})
                                        .generators();
  for (const auto &v : v_gens)
    h_gens.push_back(v);
  data.H = PermGroup(d * k, std::move(h_gens));

  data.t_order = static_cast<Order>(p) * (static_cast<Order>(p) * p - 1) / 2;
  data.h_order = order_pow(data.t_order, k) * v_order;
  if (data.H.order(data.h_order) != data.h_order)
    throw Error(ErrorKind::AssertionFailed,
                spec.construction + ": |H| != |T|^k * |V|");

  // conjugation by phi must induce an automorphism of H
  for (const auto &g : data.H.generators())
    if (!data.H.contains(conjugated(g, data.phi)))
      throw Error(ErrorKind::AssertionFailed,
                  spec.construction + ": phi does not normalize H");
  if (!data.H.contains(data.y))
    throw Error(ErrorKind::AssertionFailed, spec.construction + ": y not in H");
  return data;
}

} // namespace

WreathConstructionData construction_data_56(int p) {
  WreathSpec spec;
  spec.construction = "5.6";
  spec.k = 4;
  spec.phi_tuple = {"b", "ba", "ab", "aba"};
  spec.phi_top = {{0, 2}};
  spec.y_tuple = {"bab", "baba", "abb", "abba"};
  spec.h1_top = {{0, 1}, {2, 3}};
  spec.h2_tuple = {{"Baba", "aBab", "Baba", "aBab"}};
  spec.h2_top = {{0, 3}, {1, 2}};
  spec.y1_tuple = {"abab", "ababa", "bb", "bba"};
  spec.y2_tuple = {{"bbabbab", "abbabababa", "bbababb", "abb"}};
  return build_wreath(spec, p);
}

WreathConstructionData construction_data_57(int p) {
  WreathSpec spec;
  spec.construction = "5.7";
  spec.k = 4;
  spec.phi_tuple = {"bbab", "abb", "bb", "a"};
  spec.phi_top = {{0, 2}, {1, 3}};
  spec.y_tuple = {"bba", "abba", "bab", "bb"};
  spec.h1_top = {{0, 1}, {2, 3}};
  spec.y1_tuple = {"bb", "abb", "abba", "ababa"};
  return build_wreath(spec, p);
}

WreathConstructionData construction_data_58(int p) {
  WreathSpec spec;
  spec.construction = "5.8";
  spec.k = 8;
  spec.phi_tuple = {"b", "ba", "ab", "aba", "bb", "ab", "ba", "abba"};
  spec.phi_top = {{0, 4}, {1, 7}, {2, 6}, {3, 5}};
  spec.y_tuple = {"", "a", "abba", "abb", "", "ababa", "bb", "abbaba"};
  spec.h1_top = {{0, 1}, {2, 3}, {4, 5}, {6, 7}};
  spec.h2_tuple = {{"bb", "abba", "aba", "b", "bbaba", "abbab", "bbaba", "abbab"}};
  spec.h2_top = {{0, 3}, {1, 2}, {4, 7}, {5, 6}};
  spec.y1_tuple = {"a", "", "bba", "bb", "bab", "", "bbab", "abba"};
  spec.y2_tuple = {{"bba", "abba", "ababba", "", "bbab", "abbabbaba", "bba", ""}};
  return build_wreath(spec, p);
}

} // namespace og4
