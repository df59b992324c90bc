#include "lieherm/metric.hpp"

#include <functional>
#include <sstream>

namespace lieherm {

namespace {

/// 1-form sending basis vector X_i to phi[i], expressed in the coframe.
ExtForm one_form_from_functional(const std::shared_ptr<const Coframe>& cf,
                                 const Vec& phi) {
  int n = cf->n();
  ExtForm f(cf);
  std::vector<Vec> full = cf->q_basis();
  for (const Vec& v : cf->q_basis()) full.push_back(cf->sigma().apply(v));
  for (int a = 0; a < 2 * n; ++a) {
    GaussRational val;
    for (size_t i = 0; i < phi.size(); ++i)
      if (!phi[i].is_zero() && !full[a][i].is_zero()) val += phi[i] * full[a][i];
    if (!val.is_zero())
      f = f + ExtForm::monomial(cf, {static_cast<uint8_t>(a)}, val);
  }
  return f;
}

ExtForm two_form_from_values(
    const std::shared_ptr<const Coframe>& cf,
    const std::function<GaussRational(const Vec&, const Vec&)>& val) {
  int n2 = 2 * cf->n();
  std::vector<Vec> full = cf->q_basis();
  for (const Vec& v : cf->q_basis()) full.push_back(cf->sigma().apply(v));
  ExtForm f(cf);
  for (int a = 0; a < n2; ++a)
    for (int b = a + 1; b < n2; ++b) {
      GaussRational c = val(full[a], full[b]);
      if (!c.is_zero())
        f = f + ExtForm::monomial(
                    cf, {static_cast<uint8_t>(a), static_cast<uint8_t>(b)}, c);
    }
  return f;
}

}  // namespace

HermMetric HermMetric::identity(std::shared_ptr<const Coframe> cf) {
  int n = cf->n();
  return HermMetric{std::move(cf), ExactMatrix::identity(n)};
}

ExtForm HermMetric::fundamental_form() const {
  int n = cf->n();
  ExtForm w(cf);
  GaussRational i = GaussRational::i();
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      if (!h.at(j, k).is_zero())
        w = w + ExtForm::monomial(
                    cf, {static_cast<uint8_t>(j), static_cast<uint8_t>(n + k)},
                    i * h.at(j, k));
  return w;
}

MetricReport metric_report(const HermMetric& H) {
  int n = H.cf->n();
  Signature sig = hermitian_signature(H.h);
  if (sig.pos != n)
    fail(ErrorKind::NotPositiveDefinite, "metric matrix is not positive definite");
  ExtForm w = H.fundamental_form();
  if (!w.is_real()) fail(ErrorKind::Internal, "fundamental form is not real");

  MetricReport rep;
  ExtForm dw = w.d();
  rep.kahler = dw.is_zero();
  if (!rep.kahler) rep.d_omega = dw.str();
  ExtForm ddb = w.deldelbar();
  rep.pluriclosed = ddb.is_zero();
  if (!rep.pluriclosed) rep.ddbar_omega = ddb.str();
  ExtForm wn1 = w.pow(n - 1);
  ExtForm dwn1 = wn1.d();
  rep.balanced = dwn1.is_zero();
  if (!rep.balanced) rep.d_omega_top1 = dwn1.str();
  ExtForm g = wn1.deldelbar();
  rep.gauduchon = g.is_zero();
  if (!rep.gauduchon) rep.ddbar_omega_top1 = g.str();
  if (n >= 2) {
    ExtForm a = w.pow(n - 2).deldelbar();
    rep.astheno = a.is_zero();
    if (!rep.astheno) rep.ddbar_omega_top2 = a.str();
  } else {
    rep.astheno = true;
  }
  // Implication chain is structural; a violation means an engine bug.
  if (rep.kahler && !(rep.pluriclosed && rep.balanced))
    fail(ErrorKind::Internal, "kahler metric missing implied flags");
  if (rep.balanced && !rep.gauduchon)
    fail(ErrorKind::Internal, "balanced metric not gauduchon");
  return rep;
}

namespace {

std::string json_escape_bool(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string to_json(const MetricReport& rep) {
  std::ostringstream os;
  os << "{\"kahler\": " << json_escape_bool(rep.kahler)
     << ", \"pluriclosed\": " << json_escape_bool(rep.pluriclosed)
     << ", \"balanced\": " << json_escape_bool(rep.balanced)
     << ", \"gauduchon\": " << json_escape_bool(rep.gauduchon)
     << ", \"astheno\": " << json_escape_bool(rep.astheno);
  auto emit = [&](const char* key, const std::string& v) {
    if (!v.empty()) os << ", \"" << key << "\": \"" << v << "\"";
  };
  emit("d_omega", rep.d_omega);
  emit("ddbar_omega", rep.ddbar_omega);
  emit("d_omega_top1", rep.d_omega_top1);
  emit("ddbar_omega_top1", rep.ddbar_omega_top1);
  emit("ddbar_omega_top2", rep.ddbar_omega_top2);
  os << "}";
  return os.str();
}

std::string to_json(const ObstructionRecord& rec) {
  std::ostringstream os;
  os << "{\"generator\": \"" << rec.generator << "\", \"kind\": \"" << rec.kind
     << "\", \"sign\": " << rec.sign << ", \"rank\": " << rec.rank
     << ", \"target\": \"" << rec.target << "\", \"obstructed_p\": [";
  bool first = true;
  for (int p : rec.obstructed_p) {
    if (!first) os << ", ";
    first = false;
    os << p;
  }
  os << "]}";
  return os.str();
}

Vec balanced_frame_residual(const std::shared_ptr<const LieAlgebra>& alg,
                            const Involution& sigma,
                            const std::vector<Vec>& frame) {
  std::vector<Vec> both = frame;
  for (const Vec& v : frame) both.push_back(sigma.apply(v));
  if (2 * static_cast<int>(frame.size()) != alg->dim() ||
      ExactMatrix::from_columns(both).rank() != alg->dim())
    fail(ErrorKind::NotAFrame, "vectors do not frame a complex structure");
  Vec res(alg->dim());
  for (const Vec& v : frame) res = res + alg->bracket(v, sigma.apply(v));
  return res;
}

BalancedBasis balanced_basis_sl2m1(const SplitSlContext& ctx) {
  const auto& alg = ctx.alg;
  int d = alg->dim(), m = ctx.m;
  auto unit = [&](const Root& r) {
    Vec v(d);
    v[alg->pos_root_index(r)] = GaussRational(1);
    return v;
  };
  BalancedBasis out;
  for (int k = 1; k <= m - 1; ++k) out.frame.push_back(ctx.h_tilde(k));
  for (const Root& r : alg->roots().positive_roots) {
    int slot = static_cast<int>(out.frame.size());
    if (r == Root{m - 1, 1}) {
      // f_{a_{m-1}} = e_0 - B_{m-1} e_{a_m}
      BalancedBasis::Correction c;
      c.frame_slot = slot;
      c.base = ctx.e_zero();
      c.added = unit(Root{m, 1});
      c.coeff = -ctx.constants->at(m - 1, 1);
      c.description = "f_" + r.str() + ": e0 - B_{m-1} e_{a_m}";
      out.frame.push_back(c.base + c.coeff * c.added);
      out.corrections.push_back(std::move(c));
    } else if (r == ctx.gamma(m - 1)) {
      // f_{gamma_{m-1}} = e_gamma - Ht_{m-1}/3
      BalancedBasis::Correction c;
      c.frame_slot = slot;
      c.base = unit(r);
      c.added = ctx.h_tilde(m - 1);
      c.coeff = GaussRational(Rational(-1, 3));
      c.description = "f_" + r.str() + ": e_gamma - Ht_{m-1}/3";
      out.frame.push_back(c.base + c.coeff * c.added);
      out.corrections.push_back(std::move(c));
    } else if (r.start < m - 1 && r.len == m - r.start) {
      // f = e_a + B_j^{m-j} B(H_a, H_b) e_b with b = a_m^{m-j}
      Root b{m, r.len};
      GaussRational g = alg->killing_norm_pair(alg->coroot(r), alg->coroot(b));
      BalancedBasis::Correction c;
      c.frame_slot = slot;
      c.base = unit(r);
      c.added = unit(b);
      c.coeff = ctx.constants->at(r) * g;
      c.description = "f_" + r.str() + ": e_a + B_j^k B(H_a,H_b) e_b";
      out.frame.push_back(c.base + c.coeff * c.added);
      out.corrections.push_back(std::move(c));
    } else {
      out.frame.push_back(unit(r));
    }
  }
  return out;
}

std::vector<Vec> perturb_balanced_basis(const BalancedBasis& basis, int which,
                                        const GaussRational& delta) {
  if (which < 0 || which >= static_cast<int>(basis.corrections.size()))
    fail(ErrorKind::InvalidParameter, "no such correction");
  std::vector<Vec> frame = basis.frame;
  const auto& c = basis.corrections[which];
  frame[c.frame_slot] = c.base + (c.coeff + delta) * c.added;
  return frame;
}

namespace {

std::set<int> obstructed_set(int n, int rank) {
  std::set<int> out;
  for (int p = std::max(1, n - rank); p <= n - 1; ++p) out.insert(p);
  return out;
}

}  // namespace

std::vector<ObstructionRecord> obstruction_scan(
    const std::shared_ptr<const Coframe>& cf,
    const std::vector<std::pair<std::string, ExtForm>>& candidates) {
  std::vector<ObstructionRecord> records;
  int n = cf->n();
  for (const auto& [name, beta] : candidates) {
    ExtForm db = beta.d();
    if (db.is_zero()) continue;
    int p, q;
    if (!db.pure_bidegree(&p, &q) || p != 1 || q != 1 || !db.is_real()) continue;
    Form11Report rep = herm_rep(db);
    if (!rep.semidefinite() || rep.rank < 1) continue;
    ObstructionRecord rec;
    rec.generator = name;
    rec.kind = "d_beta";
    rec.sign = rep.positive_semidefinite() ? 1 : -1;
    rec.rank = rep.rank;
    rec.obstructed_p = obstructed_set(n, rep.rank);
    rec.target = "kahler";
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<ObstructionRecord> ddbar_obstruction_scan(
    const std::shared_ptr<const Coframe>& cf,
    const std::vector<std::pair<std::string, ExtForm>>& candidates) {
  std::vector<ObstructionRecord> records;
  int n = cf->n();
  for (const auto& [name, gamma] : candidates) {
    if (!gamma.is_real()) continue;
    ExtForm F = gamma.deldelbar() * GaussRational::i();
    if (F.is_zero()) continue;
    int sign = diagonal_positive_combination(F);
    if (sign == 0) continue;
    int p, q;
    if (!F.pure_bidegree(&p, &q) || p != q) continue;
    ObstructionRecord rec;
    rec.generator = name;
    rec.kind = "deldelbar_gamma";
    rec.sign = sign;
    rec.rank = p;
    rec.obstructed_p = {n - p};
    rec.target = "pluriclosed";
    records.push_back(std::move(rec));
  }
  return records;
}

CompactFormContext make_compact_context(int N) {
  if (N < 2) fail(ErrorKind::InvalidRank, "compact context needs N >= 2");
  CompactFormContext ctx;
  ctx.N = N;
  int center = (N % 2 == 0) ? 1 : 0;
  ctx.alg = LieAlgebra::build_sl(N, center);
  ctx.tau = Involution::compact_tau(ctx.alg);
  int d = ctx.alg->dim();

  std::vector<Vec> basis;
  std::vector<std::string> labels;
  GaussRational zeta(Rational(1), Rational(1));  // 1 + i
  int pairs = (N - 1) / 2;
  for (int i = 1; i <= pairs; ++i) {
    Vec v(d);
    v[ctx.alg->h_index(2 * i - 1)] = GaussRational(1);
    v[ctx.alg->h_index(2 * i)] = zeta;
    basis.push_back(std::move(v));
    labels.push_back("t" + std::to_string(i));
  }
  if (center == 1) {
    Vec v(d);
    v[ctx.alg->h_index(N - 1)] = GaussRational(1);
    v[ctx.alg->center_index(0)] = GaussRational::i();
    basis.push_back(std::move(v));
    labels.push_back("t" + std::to_string(pairs + 1));
  }
  for (const Root& r : ctx.alg->roots().positive_roots) {
    Vec v(d);
    v[ctx.alg->pos_root_index(r)] = GaussRational(1);
    basis.push_back(std::move(v));
    labels.push_back("e_" + r.str());
  }
  ctx.q = make_complex_structure(ctx.alg, ctx.tau, std::move(basis),
                                 std::move(labels));
  ctx.cf = Coframe::make(ctx.q);
  return ctx;
}

namespace {

/// Functional vanishing on root vectors, real-valued on the compact real
/// form: value -i * weights_j on h_j (and -i * cweight on the center).
Vec compact_cartan_functional(const CompactFormContext& ctx,
                              const std::vector<GaussRational>& weights,
                              const GaussRational& cweight = GaussRational(0)) {
  Vec phi(ctx.alg->dim());
  GaussRational mi = -GaussRational::i();
  for (int j = 1; j <= ctx.alg->num_h(); ++j)
    if (j <= static_cast<int>(weights.size()))
      phi[ctx.alg->h_index(j)] = mi * weights[j - 1];
  if (ctx.alg->center_count() > 0)
    phi[ctx.alg->center_index(0)] = mi * cweight;
  return phi;
}

}  // namespace

DxiReport compact_dxi(const CompactFormContext& ctx) {
  // rho pairs to 1 with every simple coroot; oriented so that d xi comes out
  // semi-positive under the engine's d-sign convention.
  std::vector<GaussRational> w(ctx.alg->num_h(), GaussRational(-1));
  ExtForm xi = one_form_from_functional(ctx.cf, compact_cartan_functional(ctx, w));
  if (!xi.is_real()) fail(ErrorKind::Internal, "xi is not a real form");
  DxiReport rep{ExtForm(ctx.cf), Form11Report{}, ObstructionRecord{}};
  rep.dxi = xi.d();
  rep.herm = herm_rep(rep.dxi);
  int n = ctx.cf->n();
  rep.record.generator = "rho_dual";
  rep.record.kind = "d_beta";
  rep.record.sign = rep.herm.positive_semidefinite() ? 1
                    : rep.herm.negative_semidefinite() ? -1
                                                       : 0;
  rep.record.rank = rep.herm.rank;
  rep.record.obstructed_p = obstructed_set(n, rep.herm.rank);
  rep.record.target = "kahler";
  return rep;
}

DdcReport ddc_degenerate_form(const CompactFormContext& ctx) {
  const auto& alg = ctx.alg;
  int d = alg->dim();
  int s = alg->num_h() + alg->center_count();  // cartan block size
  auto cart_index = [&](int t) {
    return t < alg->num_h() ? alg->h_index(t + 1) : alg->center_index(0);
  };

  // J on the cartan block, complexified: J = 2i P_q - i.
  std::vector<Vec> full = ctx.q.q_basis;
  for (const Vec& v : ctx.q.q_basis) full.push_back(ctx.tau.apply(v));
  ExactMatrix Zinv = ExactMatrix::from_columns(full).inverse();
  int n = ctx.cf->n();
  auto apply_J = [&](const Vec& v) {
    Vec coords = Zinv * v;
    Vec W(d);
    for (int t = 0; t < n; ++t)
      if (!coords[t].is_zero()) W = W + coords[t] * ctx.q.q_basis[t];
    return GaussRational::i() * (GaussRational(2) * W - v);
  };
  std::vector<Vec> cart;
  for (int t = 0; t < s; ++t) {
    Vec v(d);
    v[cart_index(t)] = GaussRational(1);
    cart.push_back(std::move(v));
  }
  std::vector<Vec> jcart;
  for (const Vec& v : cart) {
    Vec jv = apply_J(v);
    for (int i = 0; i < d; ++i) {
      bool on_cartan = false;
      for (int t = 0; t < s; ++t)
        if (i == cart_index(t)) on_cartan = true;
      if (!on_cartan && !jv[i].is_zero())
        fail(ErrorKind::NotRegularStructure, "J does not preserve the cartan");
    }
    jcart.push_back(std::move(jv));
  }

  // Solve for symmetric h on the cartan block: J-invariance, reality with
  // respect to tau, h(H_{a1}, H_{a2}) = 1, zero on root vectors (structural).
  // Unknowns: h_ab (a <= b) complex -> real/imag parts.
  int nu = s * (s + 1) / 2;
  auto idx_of = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    return a * s - a * (a - 1) / 2 + (b - a);
  };
  auto h_entry = [&](const std::vector<GaussRational>& hv, int a, int b) {
    return hv[idx_of(a, b)];
  };
  // Equations are C-linear in h: J-invariance h(J t_a, J t_b) = h(t_a, t_b)
  // and the normalization; tau-reality is imposed by solving over the reals
  // with conjugate-symmetric structure below.
  std::vector<Vec> eq_rows;
  Vec rhs_rows;
  auto jcoord = [&](int a, int t) {  // coefficient of cart[t] in J(cart[a])
    return jcart[a][cart_index(t)];
  };
  for (int a = 0; a < s; ++a)
    for (int b = a; b < s; ++b) {
      Vec row(nu);
      for (int t = 0; t < s; ++t)
        for (int u = 0; u < s; ++u) {
          GaussRational c = jcoord(a, t) * jcoord(b, u);
          if (!c.is_zero()) row[idx_of(t, u)] += c;
        }
      row[idx_of(a, b)] -= GaussRational(1);
      eq_rows.push_back(std::move(row));
      rhs_rows.push_back(GaussRational(0));
    }
  {
    // h(coroot(a_1), coroot(a_2)) = 1; coroots are plain h-basis sums.
    Vec row(nu);
    Vec ca = alg->coroot(Root{1, 1});
    Vec cb = alg->coroot(Root{2, 1});
    for (int t = 0; t < s; ++t)
      for (int u = 0; u < s; ++u) {
        GaussRational c = ca[cart_index(t)] * cb[cart_index(u)];
        if (!c.is_zero()) row[idx_of(t, u)] += c;
      }
    eq_rows.push_back(std::move(row));
    rhs_rows.push_back(GaussRational(1));
  }
  // Split complex unknowns/equations into reals, also demanding that the
  // matrix be real on the real cartan i*h_j (tau-reality): h(t_a, t_b) real
  // on the h-basis works out to h entries real here, since the basis vectors
  // are real combinations.  Impose Im(h_ab) = 0.
  int nreal = 2 * nu;
  std::vector<Vec> rrows;
  Vec rrhs;
  for (size_t r = 0; r < eq_rows.size(); ++r) {
    Vec re(nreal), im(nreal);
    for (int v = 0; v < nu; ++v) {
      const GaussRational& c = eq_rows[r][v];
      re[2 * v] = GaussRational(c.re);
      re[2 * v + 1] = GaussRational(-c.im);
      im[2 * v] = GaussRational(c.im);
      im[2 * v + 1] = GaussRational(c.re);
    }
    rrows.push_back(std::move(re));
    rrhs.push_back(GaussRational(rhs_rows[r].re));
    rrows.push_back(std::move(im));
    rrhs.push_back(GaussRational(rhs_rows[r].im));
  }
  for (int v = 0; v < nu; ++v) {
    Vec row(nreal);
    row[2 * v + 1] = GaussRational(1);
    rrows.push_back(std::move(row));
    rrhs.push_back(GaussRational(0));
  }
  ExactMatrix A = ExactMatrix::from_rows(rrows);
  LinearSolution sol = solve_linear(A, rrhs);
  if (!sol.consistent)
    fail(ErrorKind::NotRegularStructure,
         "no J-invariant h with the required normalization");
  std::vector<GaussRational> hv(nu);
  for (int v = 0; v < nu; ++v)
    hv[v] = GaussRational(sol.particular[2 * v].re, sol.particular[2 * v + 1].re);

  auto h_pair = [&](const Vec& x, const Vec& y) {
    GaussRational out;
    for (int t = 0; t < s; ++t)
      for (int u = 0; u < s; ++u) {
        GaussRational c = x[cart_index(t)] * y[cart_index(u)];
        if (!c.is_zero()) out += c * h_entry(hv, t, u);
      }
    return out;
  };

  ExtForm omega = two_form_from_values(
      ctx.cf, [&](const Vec& X, const Vec& Y) { return h_pair(apply_J(X), Y); });
  if (!omega.is_real() ||
      !(omega.part(1, 1) == omega))
    fail(ErrorKind::Internal, "omega is not a real (1,1)-form");
  ExtForm ddc = omega.ddc();

  DdcReport rep;
  rep.pattern_holds = true;
  rep.others_vanish = true;
  const auto& rs = alg->roots();
  int P = rs.num_positive();
  auto root_vec = [&](int signed_idx) {  // 0..P-1 positive, P..2P-1 negative
    Vec v(d);
    if (signed_idx < P)
      v[alg->pos_root_index(rs.positive_roots[signed_idx])] = GaussRational(1);
    else
      v[alg->neg_root_index(rs.positive_roots[signed_idx - P])] = GaussRational(1);
    return v;
  };
  auto signed_coroot = [&](int signed_idx) {
    Vec c = alg->coroot(rs.positive_roots[signed_idx % P]);
    if (signed_idx >= P) c = GaussRational(-1) * c;
    return c;
  };
  auto signed_name = [&](int signed_idx) {
    std::string nm = rs.positive_roots[signed_idx % P].str();
    return signed_idx >= P ? "-" + nm : nm;
  };
  for (int a = 0; a < 2 * P; ++a)
    for (int b = 0; b < 2 * P; ++b) {
      if (a % P == b % P) continue;  // beta = +-alpha excluded (alpha+beta=0 or degenerate)
      GaussRational val = ddc.eval(
          {root_vec(a), root_vec((a + P) % (2 * P)), root_vec(b),
           root_vec((b + P) % (2 * P))});
      GaussRational expect =
          GaussRational(-2) * h_pair(signed_coroot(a), signed_coroot(b));
      if (val != expect) rep.pattern_holds = false;
      if (a <= b) rep.table.emplace_back(signed_name(a), signed_name(b), val);
      if (!val.is_zero()) rep.obstructs_n_minus_2 = true;
    }
  // Every basis quadruple that is not a (+-alpha, +-beta) pair pattern.
  for (int i = 0; i < d && rep.others_vanish; ++i)
    for (int j = i + 1; j < d && rep.others_vanish; ++j)
      for (int k = j + 1; k < d && rep.others_vanish; ++k)
        for (int l = k + 1; l < d; ++l) {
          Root ri, rj, rk, rl;
          bool ni, nj, nk, nl;
          bool roots4 = alg->root_of_index(i, &ri, &ni) &&
                        alg->root_of_index(j, &rj, &nj) &&
                        alg->root_of_index(k, &rk, &nk) &&
                        alg->root_of_index(l, &rl, &nl);
          if (roots4) {
            // Pair pattern: {a, -a, b, -b} as a set.
            bool pair1 = (ri == rj && ni != nj && rk == rl && nk != nl);
            bool pair2 = (ri == rk && ni != nk && rj == rl && nj != nl);
            bool pair3 = (ri == rl && ni != nl && rj == rk && nj != nk);
            if (pair1 || pair2 || pair3) continue;
          }
          Vec vi(d), vj(d), vk(d), vl(d);
          vi[i] = GaussRational(1);
          vj[j] = GaussRational(1);
          vk[k] = GaussRational(1);
          vl[l] = GaussRational(1);
          if (!ddc.eval({vi, vj, vk, vl}).is_zero()) {
            rep.others_vanish = false;
            break;
          }
        }
  return rep;
}

bool ddc_convention_check(const CompactFormContext& ctx) {
  std::vector<GaussRational> w1(ctx.alg->num_h(), GaussRational(0));
  w1[0] = GaussRational(1);
  ExtForm b1 =
      one_form_from_functional(ctx.cf, compact_cartan_functional(ctx, w1));
  ExtForm jb1 = b1.j_act();
  if (!b1.is_real() || !jb1.is_real()) fail(ErrorKind::Internal, "non-real 1-form");
  ExtForm lhs = b1.wedge(jb1).ddc() * GaussRational(-1);
  ExtForm db1 = b1.d();
  ExtForm djb1 = jb1.d();
  ExtForm rhs = db1.wedge(db1) + djb1.wedge(djb1);
  return lhs == rhs;
}

Sl2ProductReport sl2_product_check(int n) {
  if (n != 2 && n != 3)
    fail(ErrorKind::InvalidParameter, "sl2 product check is desk scale: n in {2,3}");
  Sl2ProductReport rep;
  rep.n = n;
  auto alg = LieAlgebra::build_sl(2, 2 * n - 3);
  int d = alg->dim();
  Involution sigma = Involution::entrywise_conjugation(alg);
  // q = span{ h - i(e+f), (e-f) + i c1, c2 + i c3 (n=3) }.
  std::vector<Vec> basis;
  {
    Vec v(d);
    v[alg->h_index(1)] = GaussRational(1);
    v[alg->pos_root_index(Root{1, 1})] = -GaussRational::i();
    v[alg->neg_root_index(Root{1, 1})] = -GaussRational::i();
    basis.push_back(std::move(v));
  }
  {
    Vec v(d);
    v[alg->pos_root_index(Root{1, 1})] = GaussRational(1);
    v[alg->neg_root_index(Root{1, 1})] = GaussRational(-1);
    v[alg->center_index(0)] = GaussRational::i();
    basis.push_back(std::move(v));
  }
  if (n == 3) {
    Vec v(d);
    v[alg->center_index(1)] = GaussRational(1);
    v[alg->center_index(2)] = GaussRational::i();
    basis.push_back(std::move(v));
  }
  ComplexStructure cs = make_complex_structure(alg, sigma, std::move(basis));
  auto cf = Coframe::make(cs);
  rep.product_metric = metric_report(HermMetric::identity(cf));

  // Kahler feasibility: d omega = 0 over all hermitian parameter matrices.
  // Unknowns: diagonal entries (real) and re/im of the upper triangle.
  struct Param {
    int j, k;
    bool imag;
  };
  std::vector<Param> params;
  for (int j = 0; j < n; ++j) params.push_back({j, j, false});
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      params.push_back({j, k, false});
      params.push_back({j, k, true});
    }
  std::vector<ExtForm> dbasis;
  for (const Param& p : params) {
    ExactMatrix h(n, n);
    if (p.j == p.k) {
      h.at(p.j, p.j) = GaussRational(1);
    } else if (!p.imag) {
      h.at(p.j, p.k) = GaussRational(1);
      h.at(p.k, p.j) = GaussRational(1);
    } else {
      h.at(p.j, p.k) = GaussRational::i();
      h.at(p.k, p.j) = -GaussRational::i();
    }
    dbasis.push_back(HermMetric{cf, h}.fundamental_form().d());
  }
  // Assemble the linear system: rows indexed by monomials, real and imag.
  std::map<Monomial, int> mono_index;
  for (const ExtForm& f : dbasis)
    for (const auto& [m, c] : f.terms())
      mono_index.try_emplace(m, static_cast<int>(mono_index.size()));
  ExactMatrix A(2 * static_cast<int>(mono_index.size()),
                static_cast<int>(params.size()));
  for (size_t p = 0; p < params.size(); ++p)
    for (const auto& [m, c] : dbasis[p].terms()) {
      int r = mono_index[m];
      A.at(2 * r, static_cast<int>(p)) = GaussRational(c.re);
      A.at(2 * r + 1, static_cast<int>(p)) = GaussRational(c.im);
    }
  std::vector<Vec> kernel = A.kernel_basis();
  rep.kahler_feasible = true;
  if (kernel.empty()) {
    rep.kahler_feasible = false;
    rep.infeasibility_reason = "d omega = 0 forces omega = 0";
  } else {
    // Certificate: a diagonal entry that vanishes on the whole solution
    // space can never be positive.
    for (int j = 0; j < n && rep.kahler_feasible; ++j) {
      bool always_zero = true;
      for (const Vec& k : kernel)
        if (!k[j].is_zero()) always_zero = false;
      if (always_zero) {
        rep.kahler_feasible = false;
        rep.infeasibility_reason =
            "d omega = 0 forces h_" + std::to_string(j + 1) +
            std::to_string(j + 1) + " = 0, so no positive solution";
      }
    }
  }

  if (n == 3) {
    ExtForm w = HermMetric::identity(cf).fundamental_form();
    rep.two_pluriclosed_witness = w.pow(2).deldelbar().is_zero();
  }
  return rep;
}

}  // namespace lieherm
