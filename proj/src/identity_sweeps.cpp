#include "orthoconn/identity_sweeps.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "orthoconn/hypseries.hpp"

namespace orthoconn {

namespace {

/// Portable draws: std distributions are implementation-defined, raw mt19937_64 output is not.
class Draw {
public:
    explicit Draw(std::uint64_t seed) : engine_(seed) {}

    std::size_t index(std::size_t bound) { return static_cast<std::size_t>(engine_() % bound); }
    long between(long lo, long hi) { return lo + static_cast<long>(index(static_cast<std::size_t>(hi - lo + 1))); }

    template <class T>
    const T& pick(const std::vector<T>& pool) {
        return pool[index(pool.size())];
    }

    ParamList list(const ParamList& pool, std::size_t max_len) {
        ParamList out(index(max_len + 1));
        for (auto& v : out) v = pick(pool);
        return out;
    }

private:
    std::mt19937_64 engine_;
};

// Parameter pools free of nonpositive integers, so any of them may sit in a
// denominator without creating a pole.
const ParamList& safe_pool() {
    static const ParamList pool{Rational(1, 2), Rational(1, 3), Rational(-1, 2), Rational(2),     Rational(3),
                                Rational(5, 2), Rational(-7, 3), Rational(1),    Rational(-5, 4), Rational(7, 3)};
    return pool;
}

std::string show(const ParamList& l) {
    std::string s = "[";
    for (std::size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + l[i].str();
    return s + "]";
}

std::string show(const CoeffSeq& c) {
    std::string s = "{";
    bool first = true;
    for (const auto& [i, v] : c.terms()) {
        s += (first ? "" : ",") + std::to_string(i) + ":" + v.str();
        first = false;
    }
    return s + "}";
}

CoeffSeq random_seq(Draw& d) {
    CoeffSeq s;
    const auto support = d.index(9);  // 0..8 entries
    for (std::size_t i = 0; i < support; ++i) {
        const auto at = static_cast<std::uint32_t>(d.index(8));
        s.set(at, Rational(d.between(-5, 5), d.between(1, 4)));
    }
    return s;
}

void add_bilinear_case(IdentitySweep& sweep, const CoeffSeq& a, const CoeffSeq& b, const Rational& z,
                       const Rational& w, const Rational& c, const ExpansionParams& ep) {
    std::ostringstream desc;
    desc << "a=" << show(a) << " b=" << show(b) << " z=" << z << " w=" << w;
    sweep.cases.push_back({"shifted-form", desc.str() + " c=" + c.str(),
                           {bilinear_lhs(a, b, z, w, false), bilinear_rhs_shifted(a, b, c, z, w)}});
    sweep.cases.push_back({"jacobi-form",
                           desc.str() + " gamma=" + ep.gamma.str() + " mu=" + ep.mu.str() + " theta=" + ep.theta.str(),
                           {bilinear_lhs(a, b, z, w, true), bilinear_rhs_jacobi(a, b, ep, z, w)}});
}

std::string describe_product(const ProductInstance& w) {
    std::ostringstream os;
    os << "n=" << w.n << " a=" << show(w.a) << " b=" << show(w.b) << " c=" << show(w.c) << " d=" << show(w.d)
       << " alpha=" << show(w.alpha) << " beta=" << show(w.beta) << " z=" << w.z << " w=" << w.w;
    return os.str();
}

std::string describe_outer(const OuterInstance& l) {
    std::ostringstream os;
    os << "a=" << show(l.a) << " b=" << show(l.b) << " c_list=" << show(l.c_list) << " d=" << show(l.d)
       << " c=" << l.c << " z=" << l.z << " w=" << l.w;
    return os.str();
}

}  // namespace

bool IdentitySweep::passed() const {
    return std::all_of(cases.begin(), cases.end(), [](const SweepCase& c) { return c.check.equal(); });
}

std::size_t IdentitySweep::count(const std::string& identity) const {
    return static_cast<std::size_t>(
        std::count_if(cases.begin(), cases.end(), [&](const SweepCase& c) { return c.identity == identity; }));
}

IdentitySweep sweep_bilinear(std::uint64_t seed, std::uint32_t cases) {
    IdentitySweep sweep{"2.1", seed, {}};
    const std::vector<Rational> zw{Rational(1), Rational(-1), Rational(1, 2), Rational(-1, 2), Rational(1, 4)};
    const std::vector<Rational> cs{Rational(1, 2), Rational(1), Rational(2), Rational(7, 3)};
    const std::vector<Rational> gammas{Rational(1), Rational(1, 2), Rational(5, 3), Rational(3)};
    const std::vector<Rational> mus{Rational(2), Rational(1, 3), Rational(1)};
    const std::vector<Rational> thetas{Rational(3), Rational(-1, 2), Rational(5, 2)};
    const ExpansionParams base{Rational(1), Rational(2), Rational(3), Rational(2)};

    // degenerate and delta instances
    const CoeffSeq zero;
    add_bilinear_case(sweep, zero, zero, Rational(1), Rational(1), Rational(2), base);
    add_bilinear_case(sweep, CoeffSeq::delta(0), zero, Rational(1, 2), Rational(-1), Rational(1, 2), base);
    add_bilinear_case(sweep, CoeffSeq::delta(0), CoeffSeq::delta(0), Rational(1), Rational(1), Rational(2), base);
    add_bilinear_case(sweep, CoeffSeq::delta(1), CoeffSeq::delta(1), Rational(1), Rational(1), Rational(3), base);
    const CoeffSeq two{{0, Rational(1)}, {1, Rational(1)}};
    add_bilinear_case(sweep, two, two, Rational(1), Rational(1), Rational(2), base);

    Draw d(seed);
    for (std::uint32_t i = 0; i < cases; ++i) {
        const CoeffSeq a = random_seq(d);
        const CoeffSeq b = random_seq(d);
        const Rational z = d.pick(zw);
        const Rational w = d.pick(zw);
        const Rational c = d.pick(cs);
        const ExpansionParams ep{d.pick(gammas), d.pick(mus), d.pick(thetas), c};
        add_bilinear_case(sweep, a, b, z, w, c, ep);
    }
    return sweep;
}

IdentitySweep sweep_fields_wimp(std::uint64_t seed, std::uint32_t cases) {
    IdentitySweep sweep{"2.2", seed, {}};
    const std::vector<Rational> zs{Rational(1, 2), Rational(-1), Rational(1, 4), Rational(2), Rational(1)};
    const std::vector<Rational> ws{Rational(1, 2), Rational(-1, 2), Rational(1), Rational(3), Rational(-1, 4)};

    const auto add_product = [&](const ProductInstance& inst) {
        sweep.cases.push_back({"product", describe_product(inst), terminating_product_expansion(inst)});
    };
    const auto add_outer = [&](const OuterInstance& inst) {
        sweep.cases.push_back({"outer", describe_outer(inst), outer_truncated_expansion(inst)});
    };

    add_product(ProductInstance{0, {}, {}, {}, {}, {}, {}, Rational(1, 2), Rational(1, 2)});
    add_product(ProductInstance{1, {}, {}, {}, {}, {}, {}, Rational(1, 2), Rational(1, 2)});
    add_product(ProductInstance{2, {}, {}, {}, {}, {}, {}, Rational(1), Rational(1)});
    add_outer(OuterInstance{{Rational(-1)}, {}, {}, {}, Rational(3), Rational(1, 2), Rational(1, 2)});
    add_outer(OuterInstance{{Rational(0)}, {}, {}, {}, Rational(3), Rational(1, 2), Rational(1, 2)});
    add_outer(OuterInstance{{Rational(-1)}, {}, {}, {}, Rational(3), Rational(1), Rational(1)});

    Draw d(seed);
    const ParamList& pool = safe_pool();
    for (std::uint32_t i = 0; i < cases; ++i) {
        ProductInstance inst;
        inst.n = static_cast<std::uint32_t>(d.index(5));
        inst.a = d.list(pool, 2);
        inst.b = d.list(pool, 2);
        inst.c = d.list(pool, 2);
        inst.d = d.list(pool, 2);
        inst.alpha = d.list(pool, 2);
        inst.beta = d.list(pool, 2);
        inst.z = d.pick(zs);
        inst.w = d.pick(ws);
        add_product(inst);
    }
    const std::uint32_t outer_cases = std::max<std::uint32_t>(100, cases / 2);
    for (std::uint32_t i = 0; i < outer_cases; ++i) {
        OuterInstance inst;
        inst.a = d.list(pool, 1);
        inst.a.insert(inst.a.begin() + static_cast<long>(d.index(inst.a.size() + 1)), Rational(-d.between(0, 4)));
        inst.b = d.list(pool, 2);
        inst.c_list = d.list(pool, 2);
        inst.d = d.list(pool, 2);
        inst.c = d.pick(pool);
        inst.z = d.pick(zs);
        inst.w = d.pick(ws);
        add_outer(inst);
    }
    return sweep;
}

IdentitySweep sweep_even_odd(std::uint64_t seed, std::uint32_t cases) {
    IdentitySweep sweep{"2.3", seed, {}};
    const std::vector<Rational> args{Rational(0),     Rational(1, 2), Rational(-1, 2), Rational(1),
                                     Rational(-1),    Rational(1, 4), Rational(-1, 4)};
    const auto add = [&](const HypSeries& s) {
        std::ostringstream os;
        os << "num=" << show(s.numerators) << " den=" << show(s.denominators) << " x=" << s.argument;
        sweep.cases.push_back({"even-odd", os.str(), {evaluate_terminating(s), split_even_odd(s).evaluate()}});
    };

    add(HypSeries{{Rational(-2)}, {Rational(1)}, Rational(1, 2)});
    add(HypSeries{{Rational(0), Rational(0)}, {Rational(1, 3)}, Rational(-1)});
    add(HypSeries{{Rational(-1)}, {Rational(1)}, Rational(-1, 4)});

    Draw d(seed);
    const ParamList& pool = safe_pool();
    for (std::uint32_t i = 0; i < cases; ++i) {
        HypSeries s;
        s.numerators = d.list(pool, 2);
        s.numerators.insert(s.numerators.begin() + static_cast<long>(d.index(s.numerators.size() + 1)),
                            Rational(-d.between(0, 6)));
        s.denominators = d.list(pool, 3);
        s.argument = d.pick(args);
        add(s);
    }
    return sweep;
}

}  // namespace orthoconn
