#include "admp/search.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "admp/commands.hpp"
#include "admp/o_operators.hpp"

namespace admp {

std::string to_string(SearchTarget t) {
  switch (t) {
    case SearchTarget::adm_poisson: return "adm-poisson";
    case SearchTarget::poisson: return "poisson";
    case SearchTarget::adm_pybe_solution: return "adm-pybe-solution";
    case SearchTarget::pre_adm_poisson: return "pre-adm-poisson";
    case SearchTarget::o_operator: return "o-operator";
  }
  return "";
}

std::optional<SearchTarget> search_target_from_string(const std::string& s) {
  for (auto t : {SearchTarget::adm_poisson, SearchTarget::poisson, SearchTarget::adm_pybe_solution,
                 SearchTarget::pre_adm_poisson, SearchTarget::o_operator}) {
    std::string name = to_string(t);
    std::string underscored = name;
    std::replace(underscored.begin(), underscored.end(), '-', '_');
    if (s == name || s == underscored) return t;
  }
  return std::nullopt;
}

std::string verifying_predicate(SearchTarget t) {
  switch (t) {
    case SearchTarget::adm_poisson: return "adm-poisson";
    case SearchTarget::poisson: return "poisson";
    case SearchTarget::adm_pybe_solution: return "adm-pybe";
    case SearchTarget::pre_adm_poisson: return "pre-adm";
    case SearchTarget::o_operator: return "o-operator";
  }
  return "";
}

namespace {

using Digits = std::vector<std::uint64_t>;

// A flat coefficient space: `k` digits in [0, p), decoded into a candidate file
// when the candidate satisfies the target.
struct Space {
  std::size_t k = 0;
  std::function<std::optional<AlgebraFile>(const Digits&)> test;
};

// p^k, saturating at UINT64_MAX.
std::uint64_t power_sat(std::uint64_t p, std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (r > UINT64_MAX / p) return UINT64_MAX;
    r *= p;
  }
  return r;
}

Scalar digit(Field f, std::uint64_t d) { return Scalar::from_int(f, static_cast<long>(d)); }

AlgebraFile header(Field f, std::size_t n) {
  AlgebraFile a;
  a.field = f;
  a.dim = n;
  return a;
}

MulTensor tensor_from(Field f, std::size_t n, const Digits& d, std::size_t offset = 0) {
  MulTensor m(f, n);
  std::size_t t = offset;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m(i, j, k) = digit(f, d[t++]);
  return m;
}

const MulTensor& base_star(const SearchSpec& s) {
  if (!s.base) throw InvalidInput("this search target needs a base algebra file");
  const MulTensor* m = s.base->op("star");
  if (!m) throw InvalidInput("base file has no operation 'star'");
  if (s.base->field != Field::gf(s.p)) throw InvalidInput("base file field differs from the search field");
  return *m;
}

Space make_space(const SearchSpec& s, Field f) {
  Space sp;
  const std::size_t n = s.dim;
  switch (s.target) {
    case SearchTarget::adm_poisson:
      sp.k = n * n * n;
      sp.test = [=](const Digits& d) -> std::optional<AlgebraFile> {
        MulTensor m = tensor_from(f, n, d);
        if (!check_adm_poisson(m).holds) return std::nullopt;
        AlgebraFile a = header(f, n);
        a.set_op("star", std::move(m));
        return a;
      };
      break;
    case SearchTarget::poisson:
      // Skew bracket entries for i<j, then symmetric circ entries for i<=j.
      sp.k = n * n * n;
      sp.test = [=](const Digits& d) -> std::optional<AlgebraFile> {
        MulTensor b(f, n), c(f, n);
        std::size_t t = 0;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
              b(i, j, k) = digit(f, d[t++]);
              b(j, i, k) = -b(i, j, k);
            }
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) c(i, j, k) = c(j, i, k) = digit(f, d[t++]);
        if (!check_poisson(b, c).holds) return std::nullopt;
        AlgebraFile a = header(f, n);
        a.set_op("bracket", std::move(b));
        a.set_op("circ", std::move(c));
        return a;
      };
      break;
    case SearchTarget::adm_pybe_solution: {
      const MulTensor star = base_star(s);
      const std::size_t m = star.dim();
      const bool skew = s.skew;
      sp.k = skew ? m * (m - 1) / 2 : m * m;
      AdmPoissonAlgebra alg = AdmPoissonAlgebra::raw(star);
      sp.test = [=](const Digits& d) -> std::optional<AlgebraFile> {
        Matrix r(f, m, m);
        std::size_t t = 0;
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = skew ? i + 1 : 0; j < m; ++j) {
            r(i, j) = digit(f, d[t++]);
            if (skew) r(j, i) = -r(i, j);
          }
        if (!check_ybe(alg, RTensor{r}, YbeKind::adm_pybe).holds) return std::nullopt;
        AlgebraFile a = header(f, m);
        a.set_op("star", star);
        a.set_tensor("r", std::move(r));
        return a;
      };
      break;
    }
    case SearchTarget::pre_adm_poisson:
      sp.k = 2 * n * n * n;
      sp.test = [=](const Digits& d) -> std::optional<AlgebraFile> {
        PreAdmPoisson pre{tensor_from(f, n, d), tensor_from(f, n, d, n * n * n)};
        if (!check_pre_adm_poisson(pre).holds) return std::nullopt;
        AlgebraFile a = header(f, n);
        a.set_op("succ", std::move(pre.succ));
        a.set_op("prec", std::move(pre.prec));
        return a;
      };
      break;
    case SearchTarget::o_operator: {
      const MulTensor star = base_star(s);
      const std::size_t n2 = star.dim();
      Family l, r;
      if (s.base->family("l") || s.base->family("r")) {
        const NamedFamily* some = s.base->family("l") ? s.base->family("l") : s.base->family("r");
        std::optional<std::size_t> m;
        if (!some->entries.empty()) m = some->entries.begin()->second.rows();
        if (!m) throw InvalidInput("cannot infer the representation space dimension");
        l = s.base->family("l") ? resolve_family(*s.base->family("l"), n2, f, m) : Family(n2, Matrix(f, *m, *m));
        r = s.base->family("r") ? resolve_family(*s.base->family("r"), n2, f, m) : Family(n2, Matrix(f, *m, *m));
      } else {
        l = left_family(star);
        r = right_family(star);
      }
      const std::size_t m = l.empty() ? 0 : l[0].rows();
      sp.k = n2 * m;
      sp.test = [=](const Digits& d) -> std::optional<AlgebraFile> {
        Matrix theta(f, n2, m);
        std::size_t t = 0;
        for (std::size_t i = 0; i < n2; ++i)
          for (std::size_t j = 0; j < m; ++j) theta(i, j) = digit(f, d[t++]);
        if (!check_o_operator(star, l, r, theta).holds) return std::nullopt;
        AlgebraFile a = header(f, n2);
        a.set_op("star", star);
        a.set_family("l", l);
        a.set_family("r", r);
        a.set_map("theta", std::move(theta));
        return a;
      };
      break;
    }
  }
  return sp;
}

Digits exhaustive_digits(std::uint64_t idx, std::size_t k, std::uint64_t p) {
  // Most significant digit first, so ascending index is lexicographic order.
  Digits d(k);
  for (std::size_t t = k; t-- > 0;) {
    d[t] = idx % p;
    idx /= p;
  }
  return d;
}

Digits sampled_digits(std::uint64_t seed, std::uint64_t idx, std::size_t k, std::uint64_t p) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(idx), static_cast<std::uint32_t>(idx >> 32)};
  std::mt19937_64 rng(seq);
  Digits d(k);
  for (auto& x : d) x = rng() % p;
  return d;
}

bool all_zero(const Digits& d) {
  return std::all_of(d.begin(), d.end(), [](std::uint64_t x) { return x == 0; });
}

unsigned worker_count(const SearchSpec& s) {
  if (s.workers) return s.workers;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs `probe` over [0, total) in fixed chunks spread across workers, merging hits
// in index order. Stops early once `limit` hits are emitted.
template <class Probe>
std::uint64_t sharded_scan(std::uint64_t total, unsigned workers, std::optional<std::size_t> limit, Probe probe,
                           const std::function<void(AlgebraFile&&)>& sink) {
  constexpr std::uint64_t chunk = 2048;
  std::uint64_t emitted = 0;
  for (std::uint64_t base = 0; base < total;) {
    std::vector<std::vector<std::pair<std::uint64_t, AlgebraFile>>> hits(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      std::uint64_t lo = std::min(total, base + w * chunk), hi = std::min(total, lo + chunk);
      auto work = [&, lo, hi, w] {
        for (std::uint64_t i = lo; i < hi; ++i)
          if (auto a = probe(i)) hits[w].emplace_back(i, std::move(*a));
      };
      if (workers == 1)
        work();
      else
        pool.emplace_back(work);
    }
    for (auto& t : pool) t.join();
    for (auto& list : hits)
      for (auto& [i, a] : list) {
        sink(std::move(a));
        if (limit && ++emitted >= *limit) return i + 1;
      }
    base = std::min(total, base + std::uint64_t(workers) * chunk);
  }
  return total;
}

// Pre-adm-Poisson structures x>y = R(x)*y, x<y = x*R(y) induced by Rota-Baxter
// operators on each algebra of the exhaustive catalog, without duplicates.
SearchStats search_via_rota_baxter(const SearchSpec& s, Field f,
                                   const std::function<void(AlgebraFile&&)>& sink) {
  const std::size_t n = s.dim;
  SearchSpec cat = s;
  cat.target = SearchTarget::adm_poisson;
  cat.count.reset();
  cat.nonzero_only = false;
  cat.via_rota_baxter = false;
  std::vector<MulTensor> catalog;
  search(cat, [&](const AlgebraFile& a) { catalog.push_back(*a.op("star")); });

  const std::uint64_t per = power_sat(s.p, n * n);
  if (per > s.exhaustive_bound) throw InvalidInput("Rota-Baxter operator space too large");
  const unsigned workers = worker_count(s);
  std::vector<std::vector<PreAdmPoisson>> found(catalog.size());
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t c = w; c < catalog.size(); c += workers) {
        const MulTensor& star = catalog[c];
        for (std::uint64_t idx = 0; idx < per; ++idx) {
          Digits d = exhaustive_digits(idx, n * n, s.p);
          Matrix rb(f, n, n);
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) rb(i, j) = digit(f, d[i * n + j]);
          if (!check_rota_baxter(star, rb).holds) continue;
          PreAdmPoisson pre{MulTensor(f, n), MulTensor(f, n)};
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
              for (std::size_t k = 0; k < n; ++k)
                for (std::size_t a = 0; a < n; ++a) {
                  pre.succ(i, j, k) += rb(a, i) * star(a, j, k);
                  pre.prec(i, j, k) += rb(a, j) * star(i, a, k);
                }
          found[c].push_back(std::move(pre));
        }
      }
    });
  }
  for (auto& t : pool) t.join();

  SearchStats st;
  st.exhaustive = true;
  st.examined = catalog.size() * per;
  std::set<std::vector<std::uint64_t>> seen;
  for (auto& list : found)
    for (auto& pre : list) {
      if (s.count && st.found >= *s.count) return st;
      if (s.nonzero_only && pre.succ.is_zero() && pre.prec.is_zero()) continue;
      std::vector<std::uint64_t> key;
      for (const auto* m : {&pre.succ, &pre.prec})
        for (const Scalar& x : m->data()) key.push_back(x.residue());
      if (!seen.insert(std::move(key)).second) continue;
      AlgebraFile a = header(f, n);
      a.set_op("succ", std::move(pre.succ));
      a.set_op("prec", std::move(pre.prec));
      sink(std::move(a));
      ++st.found;
    }
  return st;
}

}  // namespace

SearchStats search(const SearchSpec& s, const std::function<void(const AlgebraFile&)>& emit) {
  const Field f = Field::gf(s.p);
  const std::string predicate = verifying_predicate(s.target);
  auto sink = [&](AlgebraFile&& a) {
    AlgebraFile back = parse_file(print_file(a));
    AxiomReport rep = evaluate_predicate(predicate, back);
    if (!rep.holds) throw std::logic_error("search hit fails re-verification: " + format_failure(*rep.witness));
    emit(back);
  };

  if (s.count && *s.count == 0) return {};
  if (s.via_rota_baxter) {
    if (s.target != SearchTarget::pre_adm_poisson)
      throw InvalidInput("the Rota-Baxter strategy only applies to pre-adm-Poisson targets");
    if (s.dim > s.max_exhaustive_dim) throw InvalidInput("dimension too large for the Rota-Baxter strategy");
    return search_via_rota_baxter(s, f, sink);
  }

  if (!s.base && s.dim == 0) throw InvalidInput("dimension must be positive");
  Space sp = make_space(s, f);
  const std::uint64_t space = power_sat(s.p, sp.k);
  const std::size_t dim = s.base ? s.base->dim : s.dim;

  SearchStats st;
  st.exhaustive = space <= s.exhaustive_bound && dim <= s.max_exhaustive_dim;
  std::uint64_t total;
  std::function<Digits(std::uint64_t)> draw;
  if (st.exhaustive) {
    total = space;
    draw = [&](std::uint64_t i) { return exhaustive_digits(i, sp.k, s.p); };
  } else {
    if (!s.samples)
      throw InvalidInput("search space of " + std::to_string(s.p) + "^" + std::to_string(sp.k) +
                         " candidates exceeds the exhaustive bound; pass a sample count");
    total = *s.samples;
    draw = [&](std::uint64_t i) { return sampled_digits(s.seed, i, sp.k, s.p); };
  }

  auto probe = [&](std::uint64_t i) -> std::optional<AlgebraFile> {
    Digits d = draw(i);
    if (s.nonzero_only && all_zero(d)) return std::nullopt;
    return sp.test(d);
  };
  st.examined = sharded_scan(total, worker_count(s), s.count, probe, [&](AlgebraFile&& a) {
    sink(std::move(a));
    ++st.found;
  });
  return st;
}

std::vector<AlgebraFile> search_all(const SearchSpec& spec) {
  std::vector<AlgebraFile> out;
  search(spec, [&](const AlgebraFile& a) { out.push_back(a); });
  return out;
}

}  // namespace admp
