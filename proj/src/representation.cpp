#include "smalc/representation.hpp"

#include <sstream>
#include <stdexcept>

namespace smalc {

bool RelMatrix::subset_of(const RelMatrix& o) const {
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i] && !o.bits[i]) return false;
  return true;
}

RelMatrix compose(const RelMatrix& r, const RelMatrix& s) {
  RelMatrix out = RelMatrix::empty(r.n);
  for (int a = 0; a < r.n; ++a)
    for (int b = 0; b < r.n; ++b) {
      if (!r.at(a, b)) continue;
      for (int c = 0; c < r.n; ++c)
        if (s.at(b, c)) out.set(a, c);
    }
  return out;
}

RelMatrix rel_union(const RelMatrix& r, const RelMatrix& s) {
  RelMatrix out = r;
  for (std::size_t i = 0; i < out.bits.size(); ++i) out.bits[i] |= s.bits[i];
  return out;
}

bool is_transitive(const RelMatrix& r) {
  for (int a = 0; a < r.n; ++a)
    for (int b = 0; b < r.n; ++b) {
      if (!r.at(a, b)) continue;
      for (int c = 0; c < r.n; ++c)
        if (r.at(b, c) && !r.at(a, c)) return false;
    }
  return true;
}

RelMatrix hat(const FiniteQuantale& q, int a) {
  if (!q.unit()) throw std::invalid_argument("hat construction requires a unital quantale");
  RelMatrix out = RelMatrix::empty(q.size());
  for (int b = 0; b < q.size(); ++b)
    for (int c = 0; c < q.size(); ++c)
      if (q.leq(b, q.mult(a, c))) out.set(b, c);
  return out;
}

bool ReprReport::ok() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string ReprReport::summary_line(int size) const {
  return "REPRESENTATION size=" + std::to_string(size) + " status=" + (ok() ? "pass" : "fail");
}

ReprReport build_relational(const FiniteQuantale& q, RelationalQuantale* out) {
  ReprReport report;
  const int n = q.size();
  RelationalQuantale rq;
  rq.source = &q;
  rq.hats.reserve(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) rq.hats.push_back(hat(q, a));

  auto add = [&report](const std::string& name, bool pass, std::string detail = "") {
    report.checks.push_back(ReprCheck{name, pass, std::move(detail)});
  };

  bool mult_ok = true;
  std::string mult_detail;
  for (int a = 0; a < n && mult_ok; ++a)
    for (int b = 0; b < n; ++b)
      if (!(compose(rq.hats[static_cast<std::size_t>(a)], rq.hats[static_cast<std::size_t>(b)]) ==
            rq.hats[static_cast<std::size_t>(q.mult(a, b))])) {
        mult_ok = false;
        mult_detail = "hat(" + std::to_string(a) + ")∘hat(" + std::to_string(b) + ") != hat(" +
                      std::to_string(a) + "*" + std::to_string(b) + ")";
        break;
      }
  add("mult", mult_ok, mult_detail);

  // Joins of every nonempty subset, in the strong plain-union form:
  // the union of the hats must already be the hat of the element join,
  // with no closure step. This identity has genuine counterexamples on
  // non-distributive carriers (smallest at size 4), which this check
  // is meant to surface rather than paper over. The empty join is the
  // least element of the family, hat(bottom), which the order check
  // covers; the plain union of zero relations is not a member.
  bool joins_ok = true;
  std::string joins_detail;
  for (std::uint32_t mask = 1; mask < (1u << n) && joins_ok; ++mask) {
    RelMatrix u = RelMatrix::empty(n);
    for (int a = 0; a < n; ++a)
      if ((mask >> a) & 1u) u = rel_union(u, rq.hats[static_cast<std::size_t>(a)]);
    if (!(u == rq.hats[static_cast<std::size_t>(q.join_mask(mask))])) {
      joins_ok = false;
      joins_detail = "union differs from hat of join for subset mask " + std::to_string(mask);
    }
  }
  add("joins", joins_ok, joins_detail);

  // Family-internal joins: the least family member containing the
  // union is the hat of the element join. This is the inclusion-order
  // join of the relation family, and it holds unconditionally.
  bool family_ok = true;
  std::string family_detail;
  for (std::uint32_t mask = 1; mask < (1u << n) && family_ok; ++mask) {
    RelMatrix u = RelMatrix::empty(n);
    for (int a = 0; a < n; ++a)
      if ((mask >> a) & 1u) u = rel_union(u, rq.hats[static_cast<std::size_t>(a)]);
    const int j = q.join_mask(mask);
    const RelMatrix& hj = rq.hats[static_cast<std::size_t>(j)];
    if (!u.subset_of(hj)) {
      family_ok = false;
      family_detail = "hat of join does not contain the union for subset mask " + std::to_string(mask);
      break;
    }
    for (int c = 0; c < n; ++c)
      if (u.subset_of(rq.hats[static_cast<std::size_t>(c)]) &&
          !hj.subset_of(rq.hats[static_cast<std::size_t>(c)])) {
        family_ok = false;
        family_detail = "hat of join is not the least member containing the union (mask " +
                        std::to_string(mask) + ")";
        break;
      }
  }
  add("family_joins", family_ok, family_detail);

  bool order_ok = true;
  std::string order_detail;
  for (int a = 0; a < n && order_ok; ++a)
    for (int b = 0; b < n; ++b)
      if (rq.hats[static_cast<std::size_t>(a)].subset_of(rq.hats[static_cast<std::size_t>(b)]) !=
          q.leq(a, b)) {
        order_ok = false;
        order_detail = "inclusion of hats disagrees with the order at (" + std::to_string(a) + "," +
                       std::to_string(b) + ")";
        break;
      }
  add("order", order_ok, order_detail);

  bool inj_ok = true;
  for (int a = 0; a < n && inj_ok; ++a)
    for (int b = a + 1; b < n; ++b)
      if (rq.hats[static_cast<std::size_t>(a)] == rq.hats[static_cast<std::size_t>(b)]) inj_ok = false;
  add("injective", inj_ok);

  // The unit's hat is the order relation itself.
  RelMatrix order_rel = RelMatrix::empty(n);
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c)
      if (q.leq(b, c)) order_rel.set(b, c);
  add("identity", q.unit() && rq.hats[static_cast<std::size_t>(*q.unit())] == order_rel);

  rq.ambient = RelMatrix::empty(n);
  for (const auto& h : rq.hats) rq.ambient = rel_union(rq.ambient, h);
  bool ambient_ok = is_transitive(rq.ambient);
  for (const auto& h : rq.hats) ambient_ok = ambient_ok && h.subset_of(rq.ambient);
  add("ambient", ambient_ok);

  if (out) *out = std::move(rq);
  return report;
}

ConucleusTransport transport_conucleus(const FiniteQuantale& q, const ConucleusMap& i) {
  ConucleusTransport t;
  const int n = q.size();
  std::vector<RelMatrix> hats;
  hats.reserve(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) hats.push_back(hat(q, a));

  // open_elements also asserts the unfolding identity for I.
  Subquantale open = open_elements(q, i);

  t.images.reserve(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    RelMatrix image = RelMatrix::empty(n);
    for (int s = 0; s < n; ++s)
      if (open.contains(s) && hats[static_cast<std::size_t>(s)].subset_of(hats[static_cast<std::size_t>(a)]))
        image = rel_union(image, hats[static_cast<std::size_t>(s)]);
    t.images.push_back(std::move(image));
  }

  t.transport_equality = true;
  for (int a = 0; a < n; ++a)
    if (!(t.images[static_cast<std::size_t>(a)] == hats[static_cast<std::size_t>(i.apply(a))]))
      t.transport_equality = false;

  // Conucleus axioms, computed on the relation matrices.
  auto err = [&t](std::string m) { t.axiom_errors.push_back(std::move(m)); };
  for (int a = 0; a < n; ++a) {
    const RelMatrix& ia = t.images[static_cast<std::size_t>(a)];
    if (!ia.subset_of(hats[static_cast<std::size_t>(a)]))
      err("not deflationary at " + std::to_string(a));
    if (!(t.images[static_cast<std::size_t>(i.apply(a))] == ia))
      err("not idempotent at " + std::to_string(a));
    for (int b = 0; b < n; ++b) {
      if (hats[static_cast<std::size_t>(a)].subset_of(hats[static_cast<std::size_t>(b)]) &&
          !ia.subset_of(t.images[static_cast<std::size_t>(b)]))
        err("not monotone at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      RelMatrix prod = compose(ia, t.images[static_cast<std::size_t>(b)]);
      if (!(prod == t.images[static_cast<std::size_t>(q.mult(i.apply(a), i.apply(b)))]))
        err("product law fails at (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
  }
  return t;
}

ConucleusClass classify_transported(const FiniteQuantale& q, const ConucleusTransport& t) {
  const int n = q.size();
  std::vector<RelMatrix> hats;
  hats.reserve(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) hats.push_back(hat(q, a));
  RelMatrix order_rel = RelMatrix::empty(n);
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c)
      if (q.leq(b, c)) order_rel.set(b, c);

  ConucleusClass cls;
  cls.is_unital = true;
  cls.is_central = true;
  cls.is_ssi = true;
  for (int a = 0; a < n; ++a) {
    const RelMatrix& ia = t.images[static_cast<std::size_t>(a)];
    if (!ia.subset_of(order_rel)) cls.is_unital = false;
    for (int b = 0; b < n; ++b) {
      const RelMatrix& hb = hats[static_cast<std::size_t>(b)];
      RelMatrix left = compose(ia, hb);
      RelMatrix right = compose(hb, ia);
      if (!(left == right)) cls.is_central = false;
      RelMatrix sandwich = compose(left, ia);
      if (!left.subset_of(sandwich) || !right.subset_of(sandwich)) cls.is_ssi = false;
    }
  }
  return cls;
}

HomTransport transport_homomorphism(const QuantaleHom& f, const ConucleusMap& i1,
                                    const ConucleusMap& i2) {
  HomTransport t;
  t.validation_errors = homomorphism_errors(f, i1, i2);
  if (!t.validation_errors.empty()) return t;

  const FiniteQuantale& src = *f.src;
  const FiniteQuantale& dst = *f.dst;
  std::vector<RelMatrix> src_hats, dst_hats;
  for (int a = 0; a < src.size(); ++a) src_hats.push_back(hat(src, a));
  for (int a = 0; a < dst.size(); ++a) dst_hats.push_back(hat(dst, a));

  t.well_defined = true;
  for (int a = 0; a < src.size(); ++a)
    for (int b = 0; b < src.size(); ++b)
      if (src_hats[static_cast<std::size_t>(a)] == src_hats[static_cast<std::size_t>(b)] &&
          !(dst_hats[static_cast<std::size_t>(f.apply(a))] ==
            dst_hats[static_cast<std::size_t>(f.apply(b))]))
        t.well_defined = false;

  ConucleusTransport t1 = transport_conucleus(src, i1);
  ConucleusTransport t2 = transport_conucleus(dst, i2);
  t.commutes = t1.ok() && t2.ok();
  for (int a = 0; a < src.size() && t.commutes; ++a) {
    // Image of the transported conucleus under hat-f, against the
    // target's transported conucleus at hat(f(a)).
    const RelMatrix& lifted = dst_hats[static_cast<std::size_t>(f.apply(i1.apply(a)))];
    const RelMatrix& target = t2.images[static_cast<std::size_t>(f.apply(a))];
    if (!(lifted == target)) t.commutes = false;
  }
  return t;
}

std::string representation_table(const FiniteQuantale& q, const RelationalQuantale& rq) {
  std::ostringstream out;
  for (int a = 0; a < q.size(); ++a) {
    out << a << " | ";
    const RelMatrix& h = rq.hats[static_cast<std::size_t>(a)];
    for (int r = 0; r < q.size(); ++r) {
      if (r) out << ' ';
      for (int c = 0; c < q.size(); ++c) out << (h.at(r, c) ? '1' : '0');
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace smalc
