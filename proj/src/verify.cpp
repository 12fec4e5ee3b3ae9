#include "milnor/verify.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <sstream>
#include <thread>

#include "milnor/classify.hpp"
#include "milnor/errors.hpp"
#include "milnor/parse.hpp"
#include "milnor/planecurve.hpp"
#include "milnor/projective.hpp"
#include "milnor/puiseux.hpp"
#include "milnor/rng.hpp"
#include "milnor/weighted.hpp"

namespace milnor {

namespace {

class Checker {
public:
    explicit Checker(std::vector<CheckResult>& out) : out_(out) {}

    // Runs `body` and records one pass/fail result; exceptions fail the check.
    template <typename F>
    void run(const std::string& name, F&& body) {
        CheckResult r{name, false, ""};
        try {
            std::ostringstream detail;
            r.passed = body(detail);
            r.detail = detail.str();
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        out_.push_back(std::move(r));
    }

private:
    std::vector<CheckResult>& out_;
};

std::string point_str(const std::vector<long>& coords) {
    std::string s = "(";
    for (std::size_t i = 0; i < coords.size(); ++i)
        s += (i ? ":" : "") + std::to_string(coords[i]);
    return s + ")";
}

mpz_class int_pow(long base, int exp) {
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), mpz_class(base).get_mpz_t(), static_cast<unsigned long>(exp));
    return out;
}

bool expects_a_type(const std::string& label) { return label.size() >= 2 && label[0] == 'A'; }
bool expects_corank_two(const std::string& label) {
    return !label.empty() && (label[0] == 'D' || label[0] == 'E' || label[0] == 'J');
}

// Local data computed once per point and shared by the checks.
struct PointData {
    Polynomial germ;
    int mult = 0;
    std::optional<std::int64_t> mu;
    std::vector<std::int64_t> seq;  // sectional sequence; empty when mu is infinite
};

}  // namespace

bool RecordReport::all_passed() const {
    for (const CheckResult& c : checks)
        if (!c.passed) return false;
    return true;
}

bool VerificationReport::all_passed() const {
    for (const RecordReport& r : records)
        if (!r.all_passed()) return false;
    return true;
}

int VerificationReport::check_count() const {
    int n = 0;
    for (const RecordReport& r : records) n += static_cast<int>(r.checks.size());
    return n;
}

int VerificationReport::failure_count() const {
    int n = 0;
    for (const RecordReport& r : records)
        for (const CheckResult& c : r.checks)
            if (!c.passed) ++n;
    return n;
}

RecordReport verify_record(const CorpusRecord& rec, std::uint64_t seed,
                           std::int64_t budget_limit, int trials) {
    auto t0 = std::chrono::steady_clock::now();
    RecordReport report;
    report.record = rec.name;
    Checker check(report.checks);
    std::uint64_t rseed = derive_seed(seed, rec.name);

    Hypersurface h = rec.hypersurface();
    const int n = rec.n();

    check.run("parse-roundtrip", [&](std::ostringstream& d) {
        Polynomial again = parse_polynomial(to_string(h.poly()), rec.nvars);
        d << "canonical text re-parses to the same polynomial";
        return again == h.poly() && h.degree() == rec.degree;
    });

    std::vector<ProjectivePoint> pts;
    for (const PointExpectation& pe : rec.points) pts.push_back(pe.point());

    check.run("singular-points", [&](std::ostringstream& d) {
        for (std::size_t i = 0; i < pts.size(); ++i) {
            std::vector<mpq_class> coords;
            for (const mpz_class& c : pts[i].coords()) coords.emplace_back(c);
            if (h.poly().evaluate(coords) != 0) {
                d << point_str(rec.points[i].coords) << " is not on the hypersurface";
                return false;
            }
            for (int v = 0; v < rec.nvars; ++v)
                if (h.poly().derivative(v).evaluate(coords) != 0) {
                    d << "gradient does not vanish at " << point_str(rec.points[i].coords);
                    return false;
                }
        }
        d << pts.size() << " listed point(s) all singular";
        return true;
    });

    // Local invariants, computed once per point.
    std::vector<PointData> data(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const PointExpectation& pe = rec.points[i];
        PointData& pd = data[i];
        std::string at = " at " + point_str(pe.coords);

        check.run("multiplicity" + at, [&](std::ostringstream& d) {
            pd.germ = germ_at(h, pts[i]);
            pd.mult = multiplicity(h, pts[i]);
            d << "computed " << pd.mult;
            if (pe.mult) {
                d << ", expected " << *pe.mult;
                return pd.mult == *pe.mult;
            }
            return pd.mult >= 2;
        });

        check.run("milnor" + at, [&](std::ostringstream& d) {
            Budget budget(budget_limit);
            pd.mu = milnor_number(pd.germ, budget);
            if (pd.mu)
                d << "computed " << *pd.mu;
            else
                d << "computed infinite";
            if (pe.mu)
                d << ", expected " << *pe.mu;
            else
                d << ", expected infinite";
            return pd.mu == pe.mu;
        });

        if (!pe.mu) continue;  // no sequence/classification for non-isolated points

        check.run("sectional" + at, [&](std::ostringstream& d) {
            Budget budget(budget_limit);
            pd.seq = germ_sectional_sequence(pd.germ, derive_seed(rseed, "sectional" + at), trials, budget);
            d << "sequence";
            for (std::int64_t v : pd.seq) d << " " << v;
            if (pd.seq.size() != static_cast<std::size_t>(n) + 1) return false;
            if (pd.seq[0] != 1) return false;
            if (pd.seq[1] != pd.mult - 1) return false;
            if (!pd.mu || pd.seq[n] != *pd.mu) return false;
            for (int k = 1; k < n; ++k)
                if (pd.seq[k - 1] * pd.seq[k + 1] < pd.seq[k] * pd.seq[k]) {
                    d << "; not log-convex at index " << k;
                    return false;
                }
            if (pe.mu_slice && pd.seq[n - 1] != *pe.mu_slice) {
                d << "; slice expected " << *pe.mu_slice;
                return false;
            }
            return true;
        });

        if (expects_a_type(pe.label) || expects_corank_two(pe.label)) {
            check.run("classify" + at, [&](std::ostringstream& d) {
                Budget budget(budget_limit);
                Classification c =
                    classify_germ(pd.germ, derive_seed(rseed, "classify" + at), trials, budget);
                d << "computed " << to_string(c.cls);
                if (expects_a_type(pe.label)) {
                    d << " k=" << c.k << ", expected A-type k=" << *pe.mu;
                    return c.cls == CoarseClass::AType && pe.mu && c.k == *pe.mu;
                }
                d << ", expected corank-two";
                return c.cls == CoarseClass::CorankTwoFamily;
            });
        }

        check.run("weights" + at, [&](std::ostringstream& d) {
            std::optional<WeightVector> w = detect_weights(pd.germ);
            if (!w) {
                d << "germ is not weighted homogeneous in these coordinates; skipped";
                return true;
            }
            mpq_class mo = milnor_orlik(*w);
            Budget budget(budget_limit);
            std::optional<std::int64_t> tau = tjurina_number(pd.germ, budget);
            d << "weight product " << mo.get_str() << ", mu " << *pd.mu;
            if (!pd.mu || mo != *pd.mu) return false;
            d << ", tjurina " << (tau ? std::to_string(*tau) : std::string("infinite"));
            return tau && *tau == *pd.mu;
        });
    }

    check.run("polar-formula", [&](std::ostringstream& d) {
        if (!rec.isolated) {
            d << "skipped: singular locus is not isolated";
            return true;
        }
        Budget budget(budget_limit);
        std::int64_t polar = polar_degree(h, pts, budget);
        d << "computed " << polar << ", expected " << rec.polar;
        return polar == rec.polar;
    });

    if (n == 2 && rec.isolated) {
        check.run("polar-elimination", [&](std::ostringstream& d) {
            std::int64_t polar =
                polar_degree_by_elimination(h, pts, derive_seed(rseed, "elim"));
            d << "computed " << polar << ", expected " << rec.polar;
            return polar == rec.polar;
        });

        check.run("singular-count", [&](std::ostringstream& d) {
            std::int64_t count = singular_point_count(h, derive_seed(rseed, "count"));
            d << "computed " << count << ", listed " << pts.size();
            return count == static_cast<std::int64_t>(pts.size());
        });
    }

    check.run("cone-flag", [&](std::ostringstream& d) {
        ApexSpace apex = apex_space(h);
        d << "apex dimension " << apex.dim() << ", cone expected: "
          << (rec.is_cone ? "yes" : "no");
        return apex.is_cone() == rec.is_cone;
    });

    check.run("hessian-flag", [&](std::ostringstream& d) {
        HessianVerdict v = hessian_vanishes(h, derive_seed(rseed, "hessian"));
        d << "vanishes: " << (v.vanishes ? "yes" : "no") << ", expected: "
          << (rec.hessian_zero ? "yes" : "no");
        if (v.vanishes != rec.hessian_zero) return false;
        if (!rec.hessian_zero && !v.certain) {
            d << "; nonzero verdict was not certain";
            return false;
        }
        return true;
    });

    if (rec.isolated && !rec.is_cone) {
        check.run("degree-bounds", [&](std::ostringstream& d) {
            for (std::size_t i = 0; i < pts.size(); ++i) {
                mpz_class mult_bound = int_pow(data[i].mult - 1, n - 1);
                if (mult_bound > rec.polar) {
                    d << "polar < (m-1)^(n-1) at " << point_str(rec.points[i].coords);
                    return false;
                }
                if (!data[i].seq.empty() && data[i].seq[n - 1] > rec.polar) {
                    d << "polar < sectional bound at " << point_str(rec.points[i].coords);
                    return false;
                }
            }
            d << "multiplicity and sectional lower bounds hold at " << pts.size()
              << " point(s)";
            return true;
        });
    }

    if (rec.factors) {
        check.run("product-rule", [&](std::ostringstream& d) {
            auto to_points = [](const std::vector<std::vector<long>>& coords) {
                std::vector<ProjectivePoint> out;
                for (const std::vector<long>& c : coords) out.push_back(ProjectivePoint::from_ints(c));
                return out;
            };
            Polynomial g = parse_polynomial(rec.factors->first.text, rec.nvars);
            Polynomial f = parse_polynomial(rec.factors->second.text, rec.nvars);
            Budget budget(budget_limit);
            ProductRuleReport pr =
                polar_product_rule(g, to_points(rec.factors->first.singular), f,
                                   to_points(rec.factors->second.singular), pts,
                                   derive_seed(rseed, "product"), budget);
            d << "product " << pr.product_polar << " = " << pr.factor_polar_g << " + "
              << pr.factor_polar_h << " + " << pr.crossings << " - 1";
            return pr.equal && pr.product_polar == rec.polar;
        });
    }

    if (n == 2) {
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const PointExpectation& pe = rec.points[i];
            if (!pe.mu) continue;
            std::string at = " at " + point_str(pe.coords);
            check.run("branches" + at, [&](std::ostringstream& d) {
                Budget budget(budget_limit);
                std::int64_t r = branch_count(data[i].germ, budget);
                std::int64_t t = tangent_cone_lines(data[i].germ).line_count;
                d << "branches " << r << ", tangent lines " << t << ", mu " << *pe.mu;
                if ((*pe.mu + r - 1) % 2 != 0) {
                    d << "; mu + r - 1 is odd";
                    return false;
                }
                if (r < t) {
                    d << "; fewer branches than tangent lines";
                    return false;
                }
                if (rec.irreducible && rec.polar < (rec.degree - 1) + (r - 1)) {
                    d << "; polar below the irreducible-curve bound";
                    return false;
                }
                return true;
            });
        }
        if (rec.irreducible && pts.empty()) {
            check.run("branches", [&](std::ostringstream& d) {
                d << "smooth irreducible curve: polar " << rec.polar << " >= degree-1 = "
                  << rec.degree - 1;
                return rec.polar >= rec.degree - 1;
            });
        }
    }

    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

VerificationReport verify_all(const std::vector<CorpusRecord>& corpus, std::uint64_t seed,
                              std::int64_t budget_limit, int trials, int jobs) {
    VerificationReport report;
    report.records.resize(corpus.size());
    if (jobs < 2 || corpus.size() < 2) {
        for (std::size_t i = 0; i < corpus.size(); ++i)
            report.records[i] = verify_record(corpus[i], seed, budget_limit, trials);
        return report;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= corpus.size()) break;
            report.records[i] = verify_record(corpus[i], seed, budget_limit, trials);
        }
    };
    std::vector<std::thread> threads;
    int count = std::min<int>(jobs, static_cast<int>(corpus.size()));
    threads.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
    return report;
}

}  // namespace milnor
