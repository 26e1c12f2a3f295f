// The classified groups with multiplier defect five, as named catalog
// entries: pc builders, the source fp presentations where the classification
// gives one, expected orders and t values, and the verification corpus.
#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "schur/families.hpp"
#include "schur/fp.hpp"
#include "schur/pc.hpp"
#include "schur/pc_products.hpp"
#include "schur/perm.hpp"
#include "schur/todd_coxeter.hpp"

namespace schur {

// Smallest quadratic non-residue mod an odd prime, by brute force.
inline long least_nonresidue(long p) {
  if (p < 3 || !is_prime(p)) throw structural_error("odd prime required");
  std::vector<char> sq(p, 0);
  for (long x = 0; x < p; ++x) sq[(x * x) % p] = 1;
  for (long n = 2; n < p; ++n)
    if (!sq[n]) return n;
  throw internal_error("no quadratic non-residue found");
}

enum class PrimeSpec { two, odd, odd_not_3, three };

inline bool admissible_prime(PrimeSpec spec, long p) {
  if (!is_prime(p)) return false;
  switch (spec) {
    case PrimeSpec::two:
      return p == 2;
    case PrimeSpec::odd:
      return p > 2;
    case PrimeSpec::odd_not_3:
      return p > 2 && p != 3;
    case PrimeSpec::three:
      return p == 3;
  }
  return false;
}

inline std::string prime_spec_str(PrimeSpec s) {
  switch (s) {
    case PrimeSpec::two:
      return "2";
    case PrimeSpec::odd:
      return "odd";
    case PrimeSpec::odd_not_3:
      return "odd, != 3";
    case PrimeSpec::three:
      return "3";
  }
  return "?";
}

// Certification data tying a pc entry to its source fp presentation.
struct FpCertificate {
  std::string source;               // .grp text
  FpPresentation fp;
  PcPresentation target;            // realization the fp maps onto
  std::vector<PcElement> images;    // generator images in `target`
  long long expected_cosets = 0;
};

struct BuiltEntry {
  PcPresentation pres;
  std::optional<FpCertificate> fp_cert;
};

struct CatalogEntry {
  std::string name;
  int item = 0;  // 1..16 for the classification, 0 for controls
  PrimeSpec primes = PrimeSpec::two;
  int n_exponent = 0;
  long expected_t = 0;
  bool control = false;
  std::function<BuiltEntry(long p, long long max_cosets)> build;
  std::string notes;
};

namespace detail {

inline std::string subst(std::string text, const std::string& key, long value) {
  std::string out;
  size_t pos = 0;
  for (;;) {
    size_t at = text.find(key, pos);
    if (at == std::string::npos) {
      out += text.substr(pos);
      return out;
    }
    out += text.substr(pos, at - pos);
    out += std::to_string(value);
    pos = at + key.size();
  }
}

// Realize an fp presentation as a pc group: Todd-Coxeter over the trivial
// subgroup, regular representation, then a pc presentation along a refined
// p-central series. Returns the entry together with its certificate.
inline BuiltEntry realize_fp(const std::string& source, long p,
                             const std::string& name, long long max_cosets) {
  FpPresentation fp = parse_presentation(source);
  CosetTable tc = todd_coxeter(fp, max_cosets);
  if (!tc.complete)
    throw capacity_error("coset enumeration for " + name +
                         " exceeded max_cosets");
  PermGroup rr = regular_rep(tc);
  PermGroupModel pm(rr);
  auto real = pc_realization(pm, p, name);
  BuiltEntry e;
  e.pres = real.pres;
  FpCertificate cert;
  cert.source = source;
  cert.fp = fp;
  cert.target = real.pres;
  for (const Perm& g : rr.gens) cert.images.push_back(real.element_of(g));
  cert.expected_cosets = tc.coset_count;
  e.fp_cert = std::move(cert);
  return e;
}

// Attach a certificate to a hand-built pc presentation.
inline BuiltEntry certify_hand_pc(PcPresentation pres,
                                  const std::string& source,
                                  std::vector<int> image_indices,
                                  long long expected_cosets) {
  BuiltEntry e;
  e.pres = std::move(pres);
  FpCertificate cert;
  cert.source = source;
  cert.fp = parse_presentation(source);
  cert.target = e.pres;
  for (int idx : image_indices)
    cert.images.push_back(PcElement::generator(e.pres, idx));
  cert.expected_cosets = expected_cosets;
  e.fp_cert = std::move(cert);
  return e;
}

// item (6): <a,b | a^{p^2} = b^{p^2} = 1, [a,b] = a^p central>, the split
// extension of Z_{p^2} by Z_{p^2} with b^-1 a b = a^{1+p}.
inline PcPresentation item6_pc(long p) {
  PcPresentation pres = PcPresentation::trivial_relations(
      p, 4, "item6(" + std::to_string(p) + ")");
  pres = pres.with_power(0, Word::gen(2));  // g1 = b, g1^p = b^p = g3
  pres = pres.with_power(1, Word::gen(3));  // g2 = a, g2^p = a^p = g4
  pres = pres.with_comm(1, 0, Word::gen(3));
  return pres;
}

// item (12): <a,b | a^4 = b^4 = 1, a^-1 b a = b^-1>.
inline PcPresentation item12_pc() {
  PcPresentation pres = PcPresentation::trivial_relations(2, 4, "item12");
  pres = pres.with_power(0, Word::gen(2));  // g1 = a, a^2 = g3
  pres = pres.with_power(1, Word::gen(3));  // g2 = b, b^2 = g4
  pres = pres.with_comm(1, 0, Word::gen(3));
  return pres;
}

}  // namespace detail

inline std::string item6_source(long p) {
  return detail::subst(detail::subst(
      "gens a, b; rels a^{P2} = 1, b^{P2} = 1, [a,b,a] = [a,b,b] = 1, "
      "[a,b] = a^{P};", "{P2}", p * p), "{P}", p);
}
inline std::string item7_source(long p) {
  return detail::subst(detail::subst(
      "gens a, b; rels a^{P2} = b^{P} = 1, [a,b,a] = [a,b,b] = a^{P}, "
      "[a,b,b,b] = 1;", "{P2}", p * p), "{P}", p);
}
inline std::string item8_source(long p) {
  long np = least_nonresidue(p) * p;
  return detail::subst(detail::subst(detail::subst(
      "gens a, b; rels a^{P2} = b^{P} = 1, [a,b,a] = 1, [a,b,b] = a^{NP}, "
      "[a,b,b,b] = 1;", "{P2}", p * p), "{NP}", np), "{P}", p);
}
inline std::string item9_source() {
  return "gens a, b; rels a^9 = 1, b^3 = a^3, [a,b,a] = 1, [a,b,b] = a^6, "
         "[a,b,b,b] = 1;";
}
inline std::string item10_source(long p) {
  return detail::subst(
      "gens a, b; rels a^{P} = 1, b^{P} = [a,b,b], "
      "[a,b,a] = [a,b,b,a] = [a,b,b,b] = 1;", "{P}", p);
}
inline std::string item11_source() {
  return "gens a, b; rels a^8 = b^2 = 1, b^-1*a*b = a^-1;";
}
inline std::string item12_source() {
  return "gens a, b; rels a^4 = b^4 = 1, a^-1*b*a = b^-1;";
}
inline std::string item16_inner_source() {
  return "gens a, b, c; rels a^2 = b^2 = c^2 = 1, abc = bca = cab;";
}

// The catalog: classification items (1)-(16) plus the control families used
// by the bounds suite. Stable order: items first, then controls.
inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v;
    auto add = [&](CatalogEntry e) { v.push_back(std::move(e)); };

    add({"item1", 1, PrimeSpec::two, 6, 5, false,
         [](long, long long) {
           return BuiltEntry{direct_product(pc_dihedral(8),
                                            pc_elem_abelian(2, 3)),
                             std::nullopt};
         },
         "D8 x Z2^(3)"});
    add({"item2", 2, PrimeSpec::odd, 7, 5, false,
         [](long p, long long) {
           return BuiltEntry{direct_product(pc_e1(p), pc_elem_abelian(p, 4)),
                             std::nullopt};
         },
         "E1 x Zp^(4)"});
    add({"item3", 3, PrimeSpec::odd, 5, 5, false,
         [](long p, long long) {
           return BuiltEntry{direct_product(pc_e2(p), pc_elem_abelian(p, 2)),
                             std::nullopt};
         },
         "E2 x Zp^(2)"});
    add({"item4", 4, PrimeSpec::odd, 5, 5, false,
         [](long p, long long) {
           return BuiltEntry{direct_product(pc_e4(p), pc_elem_abelian(p, 1)),
                             std::nullopt};
         },
         "E4 x Zp"});
    add({"item5a", 5, PrimeSpec::odd, 5, 5, false,
         [](long p, long long) {
           return BuiltEntry{pc_extraspecial(p, 2, ExtraspecialType::plus),
                             std::nullopt};
         },
         "extraspecial p^5, exponent p"});
    add({"item5b", 5, PrimeSpec::odd, 5, 5, false,
         [](long p, long long) {
           return BuiltEntry{pc_extraspecial(p, 2, ExtraspecialType::minus),
                             std::nullopt};
         },
         "extraspecial p^5, exponent p^2"});
    add({"item6", 6, PrimeSpec::odd, 4, 5, false,
         [](long p, long long) {
           return detail::certify_hand_pc(detail::item6_pc(p), item6_source(p),
                                          {1, 0}, p * p * p * p);
         },
         "Z_{p^2} : Z_{p^2} with [a,b] = a^p"});
    add({"item7", 7, PrimeSpec::odd, 4, 5, false,
         [](long p, long long mc) {
           return detail::realize_fp(item7_source(p), p,
                                     "item7(" + std::to_string(p) + ")", mc);
         },
         "maximal class, [a,b,a] = [a,b,b] = a^p"});
    add({"item8", 8, PrimeSpec::odd_not_3, 4, 5, false,
         [](long p, long long mc) {
           return detail::realize_fp(item8_source(p), p,
                                     "item8(" + std::to_string(p) + ")", mc);
         },
         "maximal class, [a,b,b] = a^{np}, n a quadratic non-residue"});
    add({"item9", 9, PrimeSpec::three, 4, 5, false,
         [](long, long long mc) {
           return detail::realize_fp(item9_source(), 3, "item9(3)", mc);
         },
         "order 81, b^3 = a^3, [a,b,b] = a^6"});
    add({"item10", 10, PrimeSpec::odd, 4, 5, false,
         [](long p, long long mc) {
           return detail::realize_fp(item10_source(p), p,
                                     "item10(" + std::to_string(p) + ")", mc);
         },
         "order p^4 with derived subgroup of order p^2"});
    add({"item11", 11, PrimeSpec::two, 4, 5, false,
         [](long, long long) {
           return detail::certify_hand_pc(pc_dihedral(16), item11_source(),
                                          {1, 0}, 16);
         },
         "D16"});
    add({"item12", 12, PrimeSpec::two, 4, 5, false,
         [](long, long long) {
           return detail::certify_hand_pc(detail::item12_pc(), item12_source(),
                                          {0, 1}, 16);
         },
         "Z4 : Z4"});
    add({"item13", 13, PrimeSpec::two, 5, 5, false,
         [](long, long long) {
           return BuiltEntry{direct_product(pc_quaternion8(),
                                            pc_elem_abelian(2, 2)),
                             std::nullopt};
         },
         "Q8 x Z2^(2)"});
    add({"item14", 14, PrimeSpec::two, 5, 5, false,
         [](long, long long) {
           return BuiltEntry{
               pc_extraspecial(2, 2, ExtraspecialType::plus).with_name(
                   "item14"),
               std::nullopt};
         },
         "(D8 x Z2) : Z2, realized as the central product D8 o D8"});
    add({"item15", 15, PrimeSpec::two, 5, 5, false,
         [](long, long long) {
           return BuiltEntry{
               pc_extraspecial(2, 2, ExtraspecialType::minus).with_name(
                   "item15"),
               std::nullopt};
         },
         "(Q8 x Z2) : Z2, realized as the central product D8 o Q8"});
    add({"item16", 16, PrimeSpec::two, 5, 5, false,
         [](long, long long mc) {
           BuiltEntry inner =
               detail::realize_fp(item16_inner_source(), 2, "item16inner", mc);
           BuiltEntry e;
           e.pres = direct_product(pc_cyclic(2, 1), inner.pres)
                        .with_name("item16");
           e.fp_cert = inner.fp_cert;  // certificate covers the inner factor
           return e;
         },
         "Z2 x <a,b,c | a^2=b^2=c^2=1, abc=bca=cab>"});

    // controls: never t = 5; recorded expected values are re-verified
    auto simple = [](std::function<PcPresentation(long)> f) {
      return [f](long p, long long) { return BuiltEntry{f(p), std::nullopt}; };
    };
    add({"item16inner", 0, PrimeSpec::two, 4, 4, true,
         [](long, long long mc) {
           return detail::realize_fp(item16_inner_source(), 2, "item16inner",
                                     mc);
         },
         "inner factor of item 16"});
    add({"Zp", 0, PrimeSpec::odd, 1, 0, true,
         simple([](long p) { return pc_cyclic(p, 1); }), "cyclic p"});
    add({"Z2", 0, PrimeSpec::two, 1, 0, true,
         simple([](long p) { return pc_cyclic(p, 1); }), "cyclic 2"});
    add({"Zp2", 0, PrimeSpec::odd, 2, 1, true,
         simple([](long p) { return pc_cyclic(p, 2); }), "cyclic p^2"});
    add({"Z4", 0, PrimeSpec::two, 2, 1, true,
         simple([](long p) { return pc_cyclic(p, 2); }), "cyclic 4"});
    add({"Zp3", 0, PrimeSpec::odd, 3, 3, true,
         simple([](long p) { return pc_cyclic(p, 3); }), "cyclic p^3"});
    add({"Z8", 0, PrimeSpec::two, 3, 3, true,
         simple([](long p) { return pc_cyclic(p, 3); }), "cyclic 8"});
    add({"Zp^2", 0, PrimeSpec::odd, 2, 0, true,
         simple([](long p) { return pc_elem_abelian(p, 2); }),
         "elementary abelian rank 2"});
    add({"Z2^2", 0, PrimeSpec::two, 2, 0, true,
         simple([](long p) { return pc_elem_abelian(p, 2); }),
         "elementary abelian rank 2"});
    add({"Zp^3", 0, PrimeSpec::odd, 3, 0, true,
         simple([](long p) { return pc_elem_abelian(p, 3); }),
         "elementary abelian rank 3"});
    add({"Z2^3", 0, PrimeSpec::two, 3, 0, true,
         simple([](long p) { return pc_elem_abelian(p, 3); }),
         "elementary abelian rank 3"});
    add({"Zp^4", 0, PrimeSpec::odd, 4, 0, true,
         simple([](long p) { return pc_elem_abelian(p, 4); }),
         "elementary abelian rank 4"});
    add({"Zp2xZp", 0, PrimeSpec::odd, 3, 2, true,
         simple([](long p) {
           return direct_product(pc_cyclic(p, 2), pc_cyclic(p, 1));
         }),
         "Z_{p^2} x Z_p"});
    add({"Z4xZ2", 0, PrimeSpec::two, 3, 2, true,
         simple([](long p) {
           return direct_product(pc_cyclic(p, 2), pc_cyclic(p, 1));
         }),
         "Z4 x Z2"});
    add({"D8", 0, PrimeSpec::two, 3, 2, true,
         simple([](long) { return pc_dihedral(8); }), "dihedral 8"});
    add({"Q8", 0, PrimeSpec::two, 3, 3, true,
         simple([](long) { return pc_quaternion8(); }), "quaternion 8"});
    add({"E1", 0, PrimeSpec::odd, 3, 1, true,
         simple([](long p) { return pc_e1(p); }), "extraspecial, exponent p"});
    add({"E2", 0, PrimeSpec::odd, 3, 3, true,
         simple([](long p) { return pc_e2(p); }),
         "extraspecial, exponent p^2"});
    add({"E4", 0, PrimeSpec::odd, 4, 4, true,
         simple([](long p) { return pc_e4(p); }), "Z_{p^2} o E1"});
    add({"E1xZp", 0, PrimeSpec::odd, 4, 2, true,
         simple([](long p) {
           return direct_product(pc_e1(p), pc_elem_abelian(p, 1));
         }),
         "E1 x Zp"});
    add({"E1xZp^2", 0, PrimeSpec::odd, 5, 3, true,
         simple([](long p) {
           return direct_product(pc_e1(p), pc_elem_abelian(p, 2));
         }),
         "E1 x Zp^(2)"});
    add({"E2xZp", 0, PrimeSpec::odd, 4, 4, true,
         simple([](long p) {
           return direct_product(pc_e2(p), pc_elem_abelian(p, 1));
         }),
         "E2 x Zp (a negative control for t = 5)"});
    add({"D8xZ2^2", 0, PrimeSpec::two, 5, 4, true,
         simple([](long) {
           return direct_product(pc_dihedral(8), pc_elem_abelian(2, 2));
         }),
         "D8 x Z2^(2) (a negative control for t = 5)"});
    add({"Q8xZ2", 0, PrimeSpec::two, 4, 4, true,
         simple([](long) {
           return direct_product(pc_quaternion8(), pc_elem_abelian(2, 1));
         }),
         "Q8 x Z2"});
    return v;
  }();
  return entries;
}

inline const CatalogEntry* find_entry(const std::string& name) {
  for (const CatalogEntry& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

// Built entries are immutable and shared; building some of them runs a coset
// enumeration, so cache per (name, p).
inline BuiltEntry build_entry(const CatalogEntry& e, long p,
                              long long max_cosets = 100'000) {
  if (!admissible_prime(e.primes, p))
    throw structural_error("prime " + std::to_string(p) +
                           " is not admissible for " + e.name +
                           " (needs p = " + prime_spec_str(e.primes) + ")");
  static std::mutex mu;
  static std::map<std::pair<std::string, long>, BuiltEntry> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(e.name, p);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  BuiltEntry built = e.build(p, max_cosets);
  if (built.pres.ngens() != e.n_exponent)
    throw internal_error(e.name + " built with n = " +
                         std::to_string(built.pres.ngens()) + ", declared " +
                         std::to_string(e.n_exponent));
  cache.emplace(key, built);
  return built;
}

struct CorpusSpec {
  std::vector<long> primes = {2, 3, 5};
  long long max_order = 1'000'000;
  bool include_controls = true;
};

struct CorpusGroup {
  const CatalogEntry* entry;
  long p;
  BuiltEntry built;
};

inline std::vector<CorpusGroup> corpus(const CorpusSpec& spec,
                                       long long max_cosets = 100'000) {
  std::vector<CorpusGroup> out;
  for (const CatalogEntry& e : catalog()) {
    if (e.control && !spec.include_controls) continue;
    for (long p : spec.primes) {
      if (!admissible_prime(e.primes, p)) continue;
      Int order = int_pow(p, static_cast<unsigned long>(e.n_exponent));
      if (order > make_int(spec.max_order)) continue;
      out.push_back({&e, p, build_entry(e, p, max_cosets)});
    }
  }
  return out;
}

}  // namespace schur
