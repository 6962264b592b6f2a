#include "nominal/cardinal.hpp"

#include <limits>
#include <random>
#include <stdexcept>

#include "nominal/perm.hpp"

namespace nominal::cardinal {

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / base)
            throw std::overflow_error("power exceeds 64 bits");
        r *= base;
    }
    return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        throw std::overflow_error("product exceeds 64 bits");
    return a * b;
}

}  // namespace

std::uint64_t nat_pair_inject(std::uint64_t m, std::uint64_t n) {
    return checked_mul(checked_pow(2, m), checked_pow(3, n));
}

std::uint64_t nat_bool_inject(std::uint64_t n, bool b) {
    return checked_pow(b ? 3 : 2, n + 1);
}

std::uint64_t nat_bool_inject_literal(std::uint64_t n, bool b) {
    return checked_pow(b ? 3 : 2, n);
}

CardWitness identity_witness(std::string name, std::function<Elem(std::uint64_t)> domain_gen) {
    CardWitness w;
    w.kind = CardWitness::Kind::Bijection;
    w.name = std::move(name);
    w.mapping = [](const Elem& x) { return x; };
    w.domain_gen = domain_gen;
    w.target_gen = domain_gen;
    w.section = [](const Elem& y) { return y; };
    return w;
}

namespace {

CardWitness nat_bool_witness_with(std::uint64_t (*fn)(std::uint64_t, bool), std::string name) {
    CardWitness w;
    w.kind = CardWitness::Kind::Injection;
    w.name = std::move(name);
    w.mapping = [fn](const Elem& x) {
        // x = (n, b) with b in {0, 1}
        const auto& parts = x.tuple_items();
        return Elem::nat(fn(parts[0].nat_value(), parts[1].nat_value() == 1));
    };
    w.domain_gen = [](std::uint64_t i) {
        return Elem::tuple({Elem::nat((i / 2) % 11), Elem::nat(i % 2)});
    };
    return w;
}

}  // namespace

CardWitness nat_pair_witness() {
    CardWitness w;
    w.kind = CardWitness::Kind::Injection;
    w.name = "nat-pair";
    w.mapping = [](const Elem& x) {
        const auto& parts = x.tuple_items();
        return Elem::nat(nat_pair_inject(parts[0].nat_value(), parts[1].nat_value()));
    };
    w.domain_gen = [](std::uint64_t i) {
        return Elem::tuple({Elem::nat(i % 11), Elem::nat((i / 11) % 11)});
    };
    return w;
}

CardWitness nat_bool_witness() { return nat_bool_witness_with(nat_bool_inject, "nat-bool"); }

CardWitness nat_bool_literal_witness() {
    return nat_bool_witness_with(nat_bool_inject_literal, "nat-bool-literal");
}

CardWitness double_inject(const Elem& x1, const Elem& x2,
                          std::function<Elem(std::uint64_t)> x_gen, std::string name) {
    if (x1 == x2) throw std::invalid_argument("the two distinguished elements must differ");
    CardWitness w;
    w.kind = CardWitness::Kind::Injection;
    w.name = std::move(name);
    w.declared_support = supp(x1) | supp(x2);
    Elem a = x1, b = x2;
    w.mapping = [a, b](const Elem& u) {
        // u = (x, tag) with tag in {0, 1}
        const auto& parts = u.tuple_items();
        return Elem::tuple({parts[0], parts[1].nat_value() == 0 ? a : b});
    };
    w.domain_gen = [x_gen](std::uint64_t i) {
        return Elem::tuple({x_gen(i / 2), Elem::nat(i % 2)});
    };
    return w;
}

CardWitness projection_witness(std::function<Elem(std::uint64_t)> x_gen, std::string name) {
    CardWitness w;
    w.kind = CardWitness::Kind::Surjection;
    w.name = std::move(name);
    w.mapping = [](const Elem& u) { return u.tuple_items()[0]; };
    w.domain_gen = [x_gen](std::uint64_t i) {
        return Elem::tuple({x_gen(i / 2), Elem::nat(i % 2)});
    };
    w.target_gen = x_gen;
    w.section = [](const Elem& y) { return Elem::tuple({y, Elem::nat(0)}); };
    return w;
}

CardWitness compose_witnesses(const CardWitness& outer, const CardWitness& inner) {
    CardWitness w;
    w.kind = CardWitness::Kind::Injection;
    w.name = outer.name + " . " + inner.name;
    w.declared_support = outer.declared_support | inner.declared_support;
    auto f = outer.mapping, g = inner.mapping;
    w.mapping = [f, g](const Elem& x) { return f(g(x)); };
    w.domain_gen = inner.domain_gen;
    return w;
}

std::string RelationReport::to_string() const {
    std::string s = ok ? "ok" : "FAILED";
    s += " (" + std::to_string(samples) + " samples)";
    for (const std::string& f : failures) s += "\n  " + f;
    return s;
}

RelationReport relation_check(Relation relation, const CardWitness& w, std::size_t samples,
                              std::uint64_t seed) {
    RelationReport report;
    report.samples = samples;
    std::mt19937_64 rng(seed);
    if (relation == Relation::Leq) {
        if (!w.domain_gen) throw std::invalid_argument("witness has no domain sampler");
        // the first `samples` domain elements plus seeded extras, checked
        // pairwise: an injection maps distinct inputs to distinct outputs
        std::vector<Elem> inputs;
        for (std::size_t i = 0; i < samples; ++i) inputs.push_back(w.domain_gen(i));
        for (std::size_t i = 0; i < samples; ++i)
            inputs.push_back(w.domain_gen(rng() % (samples * 8 + 1)));
        std::vector<Elem> images;
        images.reserve(inputs.size());
        for (const Elem& x : inputs) images.push_back(w.mapping(x));
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            for (std::size_t j = i + 1; j < inputs.size(); ++j) {
                if (inputs[i] == inputs[j]) continue;
                if (images[i] == images[j]) {
                    report.ok = false;
                    report.failures.push_back("collision: " + inputs[i].to_string() + " and " +
                                              inputs[j].to_string() + " both map to " +
                                              images[i].to_string());
                    if (report.failures.size() >= 5) return report;
                }
            }
        }
    } else {
        if (!w.target_gen || !w.section)
            throw std::invalid_argument("witness has no target sampler or section");
        for (std::size_t i = 0; i < samples; ++i) {
            Elem y = w.target_gen(rng() % (samples * 2 + 1));
            Elem x = w.section(y);
            if (!(w.mapping(x) == y)) {
                report.ok = false;
                report.failures.push_back("section misses: mapping(" + x.to_string() +
                                          ") = " + w.mapping(x).to_string() + " but wanted " +
                                          y.to_string());
            }
        }
    }
    return report;
}

RelationReport equivariance_check(const CardWitness& w, std::size_t samples, std::uint64_t seed) {
    RelationReport report;
    report.samples = samples;
    if (!w.domain_gen) throw std::invalid_argument("witness has no domain sampler");
    std::mt19937_64 rng(seed);

    AtomVec pool = w.declared_support;
    std::vector<Elem> probes;
    for (std::size_t i = 0; i < 8; ++i) {
        Elem x = w.domain_gen(i);
        pool |= supp(x);
        probes.push_back(std::move(x));
    }
    pool |= AtomVec(fresh_atoms(3));

    for (const Perm& p : sample_fix(w.declared_support, pool, samples, rng())) {
        for (const Elem& x : probes) {
            Elem lhs = w.mapping(act(p, x));
            Elem rhs = act(p, w.mapping(x));
            if (lhs != rhs) {
                report.ok = false;
                report.failures.push_back("not equivariant at " + x.to_string() + " under " +
                                          p.to_string());
            }
        }
    }
    return report;
}

ClashReport pair_surjection_clash(Atom a, Atom b, Atom c) {
    // start from f(i,a) = (a,b); i lives in a trivially acted set
    Elem start = Elem::tuple({Elem::atom(a), Elem::atom(b)});
    ClashReport report;
    report.via_ab = act(Perm::transpose(a, b), start);   // forced value of f(i,b)
    Elem via_c = act(Perm::transpose(a, c), start);      // forced value of f(i,c)
    report.via_cb = act(Perm::transpose(b, c), via_c);   // forces f(i,b) a second way
    report.consistent = report.via_ab == report.via_cb;
    return report;
}

}  // namespace nominal::cardinal
