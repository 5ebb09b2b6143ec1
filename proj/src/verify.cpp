#include "permstat/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "permstat/cosine.hpp"
#include "permstat/distributions.hpp"
#include "permstat/mesh.hpp"
#include "permstat/polynomial.hpp"
#include "permstat/statistics.hpp"

namespace permstat {

namespace {

long long choose3(long long n) { return n * (n - 1) * (n - 2) / 6; }

struct Checker {
    VerificationReport rep;
    explicit Checker(std::string suite, std::string range) {
        rep.suite = std::move(suite);
        rep.range = std::move(range);
    }
    bool ok() const { return rep.passed; }
    void expect(bool cond, const std::function<std::string()>& describe) {
        if (rep.passed && !cond) {
            rep.passed = false;
            rep.counterexample = describe();
        }
    }
};

std::string ce(const Permutation& p, const std::string& what, long long expected,
               long long actual) {
    std::ostringstream os;
    os << "pi = " << p.str() << ": " << what << " expected " << expected << ", got " << actual;
    return os.str();
}

VerificationReport suite_permutation(int max_n) {
    Checker c("permutation", "n <= " + std::to_string(max_n));
    for (int n = 1; n <= max_n && c.ok(); ++n) {
        const Permutation id = Permutation::identity(n);
        std::uint64_t count = 0;
        Permutation prev = id;
        for_each_permutation(n, [&](const Permutation& p) {
            if (!c.ok()) return;
            if (count > 0)
                c.expect(prev < p, [&] { return "enumeration not strictly lexicographic at " + p.str(); });
            prev = p;
            ++count;
            for (auto kind : {Symmetry::Reverse, Symmetry::Complement, Symmetry::Inverse})
                c.expect(symmetry(symmetry(p, kind), kind) == p,
                         [&] { return "symmetry not an involution on " + p.str(); });
            c.expect(p.compose(p.inverse()) == id,
                     [&] { return "compose(pi, pi^i) != identity on " + p.str(); });
            c.expect(dot(p, id) == dot(id, p),
                     [&] { return "dot not symmetric on " + p.str(); });
        });
        c.expect(count == factorial(n),
                 [&] { return "S_" + std::to_string(n) + " enumeration count mismatch"; });
    }
    return c.rep;
}

VerificationReport suite_sums(int max_n) {
    Checker c("sums", "n <= " + std::to_string(max_n));
    for (int n = 1; n <= max_n && c.ok(); ++n) {
        const long long tetra = choose3(n + 1);
        const long long base = choose3(n + 2);
        for_each_permutation(n, [&](const Permutation& p) {
            if (!c.ok()) return;
            const long long is = invsum(p), ns = ninvsum(p);
            c.expect(is + ns == tetra, [&] { return ce(p, "invsum+ninvsum", tetra, is + ns); });
            c.expect(ninvsum(p.inverse()) == ns,
                     [&] { return ce(p, "ninvsum(pi^i)", ns, ninvsum(p.inverse())); });
            c.expect(ninvsum(p.reverse()) == is,
                     [&] { return ce(p, "ninvsum(pi^r)", is, ninvsum(p.reverse())); });
            c.expect(ninvsum(p.complement()) == is,
                     [&] { return ce(p, "ninvsum(pi^c)", is, ninvsum(p.complement())); });
            c.expect(cosine(p) == base + ns, [&] { return ce(p, "cosine", base + ns, cosine(p)); });
        });
    }
    // ninvsum(pi o rho) = pi . rho^i - C(n+2,3), over all pairs at small rank.
    for (int n = 1; n <= std::min(max_n, 5) && c.ok(); ++n) {
        const long long base = choose3(n + 2);
        std::vector<Permutation> all;
        for_each_permutation(n, [&](const Permutation& p) { all.push_back(p); });
        for (const auto& p : all)
            for (const auto& r : all) {
                if (!c.ok()) return c.rep;
                const long long lhs = ninvsum(p.compose(r));
                const long long rhs = dot(p, r.inverse()) - base;
                c.expect(lhs == rhs, [&] {
                    return "pi = " + p.str() + ", rho = " + r.str() +
                           ": composition corollary mismatch";
                });
            }
    }
    return c.rep;
}

VerificationReport suite_zones(int max_n) {
    Checker c("zones", "n <= " + std::to_string(max_n));
    for (int n = 1; n <= max_n && c.ok(); ++n) {
        for_each_permutation(n, [&](const Permutation& p) {
            if (!c.ok()) return;
            const auto nz = zone_vector(p, PairKind::NonInversions);
            const auto iz = zone_vector(p, PairKind::Inversions);
            long long coord_sum = 0;
            for (size_t i = 0; i < nz.size(); ++i) {
                coord_sum += nz[i];
                const long long k = static_cast<long long>(i) + 1;
                c.expect(nz[i] + iz[i] == k * (n - k),
                         [&] { return ce(p, "zcv+zicv coordinate " + std::to_string(k),
                                         k * (n - k), nz[i] + iz[i]); });
            }
            c.expect(coord_sum == ninvsum(p),
                     [&] { return ce(p, "sum of nzcv", ninvsum(p), coord_sum); });
            c.expect(zone_vector(p.complement(), PairKind::NonInversions) == iz,
                     [&] { return "pi = " + p.str() + ": nzcv(pi^c) != izcv(pi)"; });
            auto iz_rev = iz;
            std::reverse(iz_rev.begin(), iz_rev.end());
            c.expect(zone_vector(p.reverse(), PairKind::NonInversions) == iz_rev,
                     [&] { return "pi = " + p.str() + ": nzcv(pi^r) != reverse(izcv(pi))"; });
            try {
                c.expect(from_augmented_ninv_zone_vector(
                             zone_vector(p, PairKind::NonInversions, true)) == p,
                         [&] { return "pi = " + p.str() + ": zone vector round trip mismatch"; });
            } catch (const NotARealizableVector&) {
                c.expect(false, [&] { return "pi = " + p.str() + ": own vector rejected"; });
            }
        });
    }
    // Insertion of a new maximum transforms the augmented vector per the
    // recursion lemma.
    for (int n = 1; n <= std::min(max_n, 7) && c.ok(); ++n) {
        for_each_permutation(n, [&](const Permutation& p) {
            if (!c.ok()) return;
            const auto a = zone_vector(p, PairKind::NonInversions, true);
            for (int k = 0; k <= n; ++k) {
                std::vector<long long> want;
                for (int j = 0; j <= k; ++j) want.push_back(a[static_cast<size_t>(j)] + j);
                for (int j = k; j <= n; ++j) want.push_back(a[static_cast<size_t>(j)]);
                const auto got =
                    zone_vector(insert_max(p, k), PairKind::NonInversions, true);
                c.expect(got == want, [&] {
                    return "pi = " + p.str() + ", k = " + std::to_string(k) +
                           ": insertion lemma vector mismatch";
                });
            }
        });
    }
    return c.rep;
}

VerificationReport suite_steps(int max_n) {
    Checker c("steps", "n <= " + std::to_string(max_n));
    for (int n = 1; n <= max_n && c.ok(); ++n) {
        for_each_permutation(n, [&](const Permutation& p) {
            if (!c.ok()) return;
            const long long inv_total = static_cast<long long>(pairs(p, PairKind::Inversions).size());
            long long sum_k = 0, weighted = 0, sum_k1k2 = 0;
            for (int k = 1; k <= n - 1; ++k) {
                sum_k += inv_k(p, k);
                weighted += static_cast<long long>(k) * inv_k(p, k);
                for (int k2 = 1; k2 <= n - 1; ++k2) sum_k1k2 += inv_k1k2(p, k, k2);
            }
            c.expect(sum_k == inv_total, [&] { return ce(p, "sum inv_k", inv_total, sum_k); });
            c.expect(weighted == invsum(p), [&] { return ce(p, "sum k*inv_k", invsum(p), weighted); });
            c.expect(sum_k1k2 == inv_total,
                     [&] { return ce(p, "sum inv_k1k2", inv_total, sum_k1k2); });
            if (n >= 2) {
                c.expect(inv_le_k(p, 1) == inv_k(p, 1),
                         [&] { return ce(p, "inv_le_1 vs descents", inv_k(p, 1), inv_le_k(p, 1)); });
                c.expect(inv_le_k(p, n - 1) == inv_total,
                         [&] { return ce(p, "inv_le_(n-1)", inv_total, inv_le_k(p, n - 1)); });
            }
            for (int k = 1; k <= n; ++k) {
                const auto runs = k_step_runs(p, k);
                long long total_len = 0;
                for (int i = 1; i <= k; ++i) {
                    const long long want = (n - i) / k + 1;
                    total_len += runs[static_cast<size_t>(i) - 1].rank();
                    c.expect(runs[static_cast<size_t>(i) - 1].rank() == want, [&] {
                        return ce(p, "run length (k=" + std::to_string(k) + ")", want,
                                  runs[static_cast<size_t>(i) - 1].rank());
                    });
                }
                c.expect(total_len == n, [&] { return ce(p, "run lengths total", n, total_len); });
            }
        });
    }
    return c.rep;
}

VerificationReport suite_lbsum(int max_n) {
    const int cap = std::min(max_n, 7);
    Checker c("lbsum", "n <= " + std::to_string(cap));
    for (int n = 1; n <= cap && c.ok(); ++n) {
        for_each_permutation(n, [&](const Permutation& p) {
            if (!c.ok()) return;
            const long long inv_total = static_cast<long long>(pairs(p, PairKind::Inversions).size());
            long long certified_total = 0;
            for (int k = 2; k <= n - 1; ++k) certified_total += certified_ninv_k(p, k);
            c.expect(lbsum(p, LbVariant::Base) == inv_total + certified_total, [&] {
                return ce(p, "lbsum(base)", inv_total + certified_total, lbsum(p, LbVariant::Base));
            });
            for (int k = 1; k <= n - 1 && c.ok(); ++k) {
                c.expect(lbsum(p, LbVariant::EqK, k) == inv_k(p, k), [&] {
                    return ce(p, "lbsum(eq_k," + std::to_string(k) + ")", inv_k(p, k),
                              lbsum(p, LbVariant::EqK, k));
                });
                long long cert_le = 0;
                for (int kk = 2; kk <= k; ++kk) cert_le += certified_ninv_k(p, kk);
                c.expect(lbsum(p, LbVariant::LeK, k) == inv_le_k(p, k) + cert_le, [&] {
                    return ce(p, "lbsum(le_k," + std::to_string(k) + ")",
                              inv_le_k(p, k) + cert_le, lbsum(p, LbVariant::LeK, k));
                });
                // ge_k: (>= k)-step inversions plus non-inversions (i, j) that
                // see a larger value at some c with i < c <= j-k.
                long long want = 0;
                for (int j = 1; j <= n; ++j)
                    for (int i = 1; i + k <= j; ++i) {
                        if (p(i) > p(j)) {
                            ++want;
                            continue;
                        }
                        for (int mid = i + 1; mid <= j - k; ++mid)
                            if (p(mid) > p(j)) {
                                ++want;
                                break;
                            }
                    }
                c.expect(lbsum(p, LbVariant::GeK, k) == want, [&] {
                    return ce(p, "lbsum(ge_k," + std::to_string(k) + ")", want,
                              lbsum(p, LbVariant::GeK, k));
                });
            }
        });
    }
    return c.rep;
}

VerificationReport suite_ipcni(int max_n) {
    const int cap = std::min(max_n, 7);
    Checker c("ipcni", "n <= " + std::to_string(cap));
    for (int n = 1; n <= cap && c.ok(); ++n) {
        for_each_permutation(n, [&](const Permutation& p) {
            if (!c.ok()) return;
            for (int k = 1; k <= n; ++k) {
                bool tail_form = true;  // sigma (k+1)(k+2)...n with sigma in S_k
                for (int j = k + 1; j <= n; ++j)
                    if (p(j) != j) tail_form = false;
                c.expect((ipcni_k(p, k) == 0) == tail_form, [&] {
                    return ce(p, "ipcni zero form (k=" + std::to_string(k) + ")", tail_form,
                              ipcni_k(p, k) == 0);
                });
            }
        });
    }
    return c.rep;
}

VerificationReport suite_polynomials(int max_n) {
    Checker c("polynomials", "n <= " + std::to_string(max_n));
    for (int n = 1; n <= max_n && c.ok(); ++n) {
        StatisticSpec desc;
        desc.tag = StatisticSpec::Tag::InvK;
        desc.k = 1;
        c.expect(eulerian(n) == dist_brute(desc, n),
                 [&] { return "eulerian(" + std::to_string(n) + ") != brute descent distribution"; });
        // q-factorial is the inversion-count distribution; inv_le_(n-1)
        // counts every inversion.
        StatisticSpec invc;
        invc.tag = StatisticSpec::Tag::InvLeK;
        invc.k = std::max(1, n - 1);
        c.expect(q_factorial(n) == dist_brute(invc, n),
                 [&] { return "q_factorial(" + std::to_string(n) + ") != brute inv distribution"; });
        for (int k = 0; k <= n && c.ok(); ++k) {
            const IntPoly qb = q_binomial(n, k);
            c.expect(qb == q_binomial(n, n - k),
                     [&] { return "q_binomial symmetry fails at (" + std::to_string(n) + "," +
                                  std::to_string(k) + ")"; });
            c.expect(qb.palindromic(), [&] {
                return "q_binomial not palindromic at (" + std::to_string(n) + "," +
                       std::to_string(k) + ")";
            });
            c.expect(qb.evaluate(1) == binomial(n, k),
                     [&] { return "q_binomial value at 1 wrong"; });
            c.expect(qb.degree() == k * (n - k) || qb.is_zero(),
                     [&] { return "q_binomial degree wrong"; });
        }
    }
    for (int k = 1; k <= 8 && c.ok(); ++k) {
        const IntPoly lhs = IntPoly::monomial(1, k) * nabla(k, IntPoly::monomial(1, k));
        std::vector<BigInt> want(static_cast<size_t>(2 * k) + 1, 0);
        for (int j = 0; j <= k; ++j) want[static_cast<size_t>(2 * k - j)] = j + 1;
        c.expect(lhs == IntPoly(std::move(want)),
                 [&] { return "x^k nabla_k(x^k) identity fails at k = " + std::to_string(k); });
    }
    return c.rep;
}

VerificationReport suite_distributions(int max_n, int jobs) {
    Checker c("distributions", "n <= " + std::to_string(max_n));
    auto spec_of = [](StatisticSpec::Tag tag, std::optional<int> k = {}, std::optional<int> k2 = {},
                      std::optional<int> d = {}) {
        StatisticSpec s;
        s.tag = tag;
        s.k = k;
        s.k2 = k2;
        s.d = d;
        return s;
    };
    using Tag = StatisticSpec::Tag;
    for (int n = 1; n <= max_n && c.ok(); ++n) {
        const BigInt mass = BigInt(factorial(n));
        const IntPoly nbrute = dist_brute(spec_of(Tag::Ninvsum), n, jobs);
        c.expect(nbrute.evaluate(1) == mass, [&] { return "ninvsum mass wrong"; });
        c.expect(nbrute.palindromic(),
                 [&] { return "N_" + std::to_string(n) + " not palindromic"; });
        c.expect(nbrute.degree() == choose3(n + 1),
                 [&] { return "N_" + std::to_string(n) + " degree wrong"; });
        c.expect(N_recurrence(n) == nbrute,
                 [&] { return "N_recurrence mismatch at n = " + std::to_string(n); });
        for (int k = 1; k <= n && c.ok(); ++k) {
            const IntPoly hb = dist_brute(spec_of(Tag::InvK, k), n, jobs);
            c.expect(H_closed(n, k) == hb, [&] {
                return "H_closed mismatch at (" + std::to_string(n) + "," + std::to_string(k) + ")";
            });
            c.expect(dist_brute(spec_of(Tag::NinvK, k), n, jobs) == hb,
                     [&] { return "inv_k vs ninv_k distribution mismatch"; });
            c.expect(I_nk0(n, k) == hb.coeff(0), [&] { return "I_nk0 mismatch"; });
            const IntPoly kb = dist_brute(spec_of(Tag::IpcniK, k), n, jobs);
            c.expect(kb.coeff(0) == K_constant_term(k),
                     [&] { return "K constant term mismatch at (" + std::to_string(n) + "," +
                                  std::to_string(k) + ")"; });
        }
        for (int k = 1; k <= n - 1 && c.ok(); ++k) {
            const IntPoly closed = zcv_coordinate_dist(n, k);
            c.expect(zcv_coordinate_brute(n, k, PairKind::NonInversions, jobs) == closed,
                     [&] { return "zcv coordinate dist (ninv) mismatch"; });
            c.expect(zcv_coordinate_brute(n, k, PairKind::Inversions, jobs) == closed,
                     [&] { return "zcv coordinate dist (inv) mismatch"; });
        }
        if (n >= 2) {
            c.expect(J_special(n, JSpecialCase::KEqNMinus1) ==
                         dist_brute(spec_of(Tag::InvLeK, n - 1), n, jobs),
                     [&] { return "J n-1 case mismatch at n = " + std::to_string(n); });
            c.expect(L_n2_nminus1(n) == dist_brute(spec_of(Tag::ModinvDK, n - 1, {}, 2), n, jobs),
                     [&] { return "L_{n,2,n-1} mismatch at n = " + std::to_string(n); });
            c.expect(K_last(n) == dist_brute(spec_of(Tag::IpcniK, n - 1), n, jobs),
                     [&] { return "K k=n-1 mismatch at n = " + std::to_string(n); });
        }
        if (n >= 3)
            c.expect(J_special(n, JSpecialCase::KEqNMinus2) ==
                         dist_brute(spec_of(Tag::InvLeK, n - 2), n, jobs),
                     [&] { return "J n-2 case mismatch at n = " + std::to_string(n); });
        if (n >= 4)
            c.expect(K_second_last(n) == dist_brute(spec_of(Tag::IpcniK, n - 2), n, jobs),
                     [&] { return "K k=n-2 mismatch at n = " + std::to_string(n); });
        c.expect(J_special(n, JSpecialCase::KEq1) == dist_brute(spec_of(Tag::InvLeK, 1), n, jobs),
                 [&] { return "J k=1 case mismatch at n = " + std::to_string(n); });
        for (int k = 1; k <= n - 1 && c.ok(); ++k) {
            const IntPoly jb = dist_brute(spec_of(Tag::InvLeK, k), n, jobs);
            c.expect(jb.degree() == J_degree(n - 1, k),
                     [&] { return "J degree mismatch at (" + std::to_string(n) + "," +
                                  std::to_string(k) + ")"; });
        }
        // Extremal predictions against brute degree and leading coefficient.
        for (int k1 = n / 2 + 1; k1 <= n - 1 && c.ok(); ++k1)
            for (int k2 = n / 2 + 1; k2 <= n - 1 && c.ok(); ++k2) {
                if (2 * k1 <= n || 2 * k2 <= n) continue;
                const auto [deg, lead] = H_k1k2_extremal(n, k1, k2);
                const IntPoly b = dist_brute(spec_of(Tag::InvK1K2, k1, k2), n, jobs);
                c.expect(b.degree() == deg && b.coeff(deg) == lead, [&] {
                    return "H_k1k2 extremal mismatch at (" + std::to_string(n) + "," +
                           std::to_string(k1) + "," + std::to_string(k2) + ")";
                });
            }
        for (int d = 2; d <= 3 && c.ok(); ++d)
            for (int k = n / 2 + 1; k <= n - 1 && c.ok(); ++k) {
                if (2 * k <= n || d > n) continue;
                const auto [deg, lead] = L_leading(n, d, k);
                const IntPoly b = dist_brute(spec_of(Tag::ModinvDK, k, {}, d), n, jobs);
                c.expect(b.degree() == deg && b.coeff(deg) == lead, [&] {
                    return "L_leading mismatch at (" + std::to_string(n) + "," +
                           std::to_string(d) + "," + std::to_string(k) + ")";
                });
            }
    }
    // Value-gap definition on pi matches the position-gap definition on pi^i.
    for (int n = 2; n <= std::min(max_n, 7) && c.ok(); ++n) {
        for_each_permutation(n, [&](const Permutation& p) {
            if (!c.ok()) return;
            for (int k = 1; k <= n - 1; ++k) {
                long long value_gap = 0;
                for (int a = 1; a < n; ++a)
                    for (int b = a + 1; b <= n; ++b)
                        if (p(a) - p(b) == k) ++value_gap;
                c.expect(value_gap == inv_k(p.inverse(), k), [&] {
                    return ce(p, "value-gap inv_k (k=" + std::to_string(k) + ")",
                              inv_k(p.inverse(), k), value_gap);
                });
            }
        });
    }
    return c.rep;
}

VerificationReport suite_cosine(int max_n) {
    Checker c("cosine", "k <= 100000");
    for (long long k = 1; k <= 1000000 && c.ok(); k += 997) {
        const int n = rank_for(k);
        c.expect(choose3(n + 2) <= k && k < choose3(n + 3),
                 [&] { return "rank_for inequality fails at k = " + std::to_string(k); });
    }
    for (int n = 6; n <= 40 && c.ok(); ++n)
        c.expect(choose3(n + 1) + choose3(n) >= choose3(n + 2) - 1,
                 [&] { return "pascal-style bound fails at n = " + std::to_string(n); });
    for (int m = 0; m <= 10 && c.ok(); ++m)
        c.expect(ninvsum(nu(m)) == m, [&] { return "nu table wrong at m = " + std::to_string(m); });
    for (int n = 4; n <= std::min(std::max(max_n, 4), 9) && c.ok(); ++n)
        for (long long m = 0; m <= choose3(n + 1) && c.ok(); ++m) {
            const Permutation p = zeta(m, n);
            c.expect(p.rank() == n && ninvsum(p) == m,
                     [&] { return "zeta(" + std::to_string(m) + "," + std::to_string(n) +
                                  ") has wrong ninvsum"; });
        }
    for (long long k = 1; k <= 100000 && c.ok(); ++k) {
        if (!cosine_achievable(k)) {
            try {
                construct(k);
                c.expect(false, [&] { return "construct accepted excluded k = " + std::to_string(k); });
            } catch (const NotAchievable&) {
            }
            continue;
        }
        const Permutation p = construct(k);
        c.expect(cosine(p) == k,
                 [&] { return "construct(" + std::to_string(k) + ") has wrong dot product"; });
    }
    for (long long k = 1; k <= 60 && c.ok(); ++k) {
        const long long count = count_with_cosine(k, 6);
        c.expect((count == 0) == !cosine_achievable(k),
                 [&] { return "count_with_cosine zero-set mismatch at k = " + std::to_string(k); });
    }
    return c.rep;
}

VerificationReport suite_mesh(int max_n) {
    const int cap = std::min(max_n, 7);
    Checker c("mesh", "n <= " + std::to_string(cap));
    for (int n = 2; n <= cap && c.ok(); ++n) {
        for_each_permutation(n, [&](const Permutation& p) {
            if (!c.ok()) return;
            long long occ_total = 0, occ_weighted = 0;
            for (int k = 1; k <= n - 1; ++k) {
                BuiltinParams prm;
                prm.k = k;
                prm.n = n;
                const long long kstep = occurrences(builtin(BuiltinPattern::KStepInv, prm), p);
                occ_total += kstep;
                occ_weighted += static_cast<long long>(k) * kstep;
                c.expect(kstep == inv_k(p, k),
                         [&] { return ce(p, "kstep_inv pattern (k=" + std::to_string(k) + ")",
                                         inv_k(p, k), kstep); });
                c.expect(occurrences(builtin(BuiltinPattern::LeKStepInv, prm), p) == inv_le_k(p, k),
                         [&] { return ce(p, "le_kstep_inv pattern (k=" + std::to_string(k) + ")",
                                         inv_le_k(p, k),
                                         occurrences(builtin(BuiltinPattern::LeKStepInv, prm), p)); });
                c.expect(occurrences(builtin(BuiltinPattern::ZcvCoord, prm), p) ==
                             zone_vector(p, PairKind::Inversions)[static_cast<size_t>(k) - 1],
                         [&] { return ce(p, "zcv_coord pattern (k=" + std::to_string(k) + ")",
                                         zone_vector(p, PairKind::Inversions)[static_cast<size_t>(k) - 1],
                                         occurrences(builtin(BuiltinPattern::ZcvCoord, prm), p)); });
                for (int k2 = 1; k2 <= n - 1; ++k2) {
                    BuiltinParams pk;
                    pk.k = k;
                    pk.k2 = k2;
                    c.expect(occurrences(builtin(BuiltinPattern::K1K2Inv, pk), p) ==
                                 inv_k1k2(p, k, k2),
                             [&] { return ce(p, "k1k2 pattern", inv_k1k2(p, k, k2),
                                             occurrences(builtin(BuiltinPattern::K1K2Inv, pk), p)); });
                }
                for (int d = 2; d <= 3; ++d) {
                    long long total = 0;
                    for (int ell = 1; d * ell <= n; ++ell) {
                        BuiltinParams pm;
                        pm.k = k;
                        pm.d = d;
                        pm.n = n;
                        pm.ell = ell;
                        total += occurrences(builtin(BuiltinPattern::ModinvTop, pm), p);
                    }
                    c.expect(total == modinv_dk(p, d, k),
                             [&] { return ce(p, "modinv_top patterns (d=" + std::to_string(d) +
                                             ",k=" + std::to_string(k) + ")",
                                             modinv_dk(p, d, k), total); });
                }
                if (k >= 2)
                    c.expect(occurrences(builtin(BuiltinPattern::CertifiedKStep, prm), p) ==
                                 certified_ninv_k(p, k),
                             [&] { return ce(p, "certified pattern (k=" + std::to_string(k) + ")",
                                             certified_ninv_k(p, k),
                                             occurrences(builtin(BuiltinPattern::CertifiedKStep, prm), p)); });
            }
            const long long inv_total = static_cast<long long>(pairs(p, PairKind::Inversions).size());
            c.expect(occ_total == inv_total,
                     [&] { return ce(p, "sum of kstep patterns", inv_total, occ_total); });
            c.expect(occ_weighted == invsum(p),
                     [&] { return ce(p, "weighted sum of kstep patterns", invsum(p), occ_weighted); });
        });
    }
    return c.rep;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"permutation", "sums",  "zones",  "steps",        "lbsum",
            "ipcni",       "polynomials", "distributions", "cosine", "mesh"};
}

VerificationReport run_suite(const std::string& name, int max_n, int jobs) {
    if (name == "permutation") return suite_permutation(max_n);
    if (name == "sums") return suite_sums(max_n);
    if (name == "zones") return suite_zones(max_n);
    if (name == "steps") return suite_steps(max_n);
    if (name == "lbsum") return suite_lbsum(max_n);
    if (name == "ipcni") return suite_ipcni(max_n);
    if (name == "polynomials") return suite_polynomials(max_n);
    if (name == "distributions") return suite_distributions(max_n, jobs);
    if (name == "cosine") return suite_cosine(max_n);
    if (name == "mesh") return suite_mesh(max_n);
    throw OutOfRange("unknown suite '" + name + "'");
}

std::vector<VerificationReport> run_all_suites(int max_n, int jobs) {
    std::vector<VerificationReport> out;
    for (const auto& name : suite_names()) out.push_back(run_suite(name, max_n, jobs));
    return out;
}

}  // namespace permstat
