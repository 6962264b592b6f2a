#include "nominal/fixpoint.hpp"

#include <random>

#include "nominal/atom_set.hpp"

namespace nominal::fixpoint {

MonotoneMap MonotoneMap::identity() { return MonotoneMap(Identity{}); }
MonotoneMap MonotoneMap::const_union(AtomVec add) { return MonotoneMap(ConstUnion{std::move(add)}); }
MonotoneMap MonotoneMap::image_union(AtomFun g) {
    return MonotoneMap(ImageUnion{g.normalized()});
}
MonotoneMap MonotoneMap::perm_image(Perm p) { return MonotoneMap(PermImage{std::move(p)}); }
MonotoneMap MonotoneMap::union_of(MonotoneMap l, MonotoneMap r) {
    return MonotoneMap(UnionOf{std::make_shared<const MonotoneMap>(std::move(l)),
                               std::make_shared<const MonotoneMap>(std::move(r))});
}
MonotoneMap MonotoneMap::compose_of(MonotoneMap outer, MonotoneMap inner) {
    return MonotoneMap(ComposeOf{std::make_shared<const MonotoneMap>(std::move(outer)),
                                 std::make_shared<const MonotoneMap>(std::move(inner))});
}
MonotoneMap MonotoneMap::opaque(std::function<AtomVec(const AtomVec&)> fn, AtomVec declared,
                                std::string name) {
    return MonotoneMap(Opaque{std::move(fn), std::move(declared), std::move(name)});
}

AtomVec MonotoneMap::operator()(const AtomVec& z) const {
    struct Visitor {
        const AtomVec& z;
        AtomVec operator()(const Identity&) const { return z; }
        AtomVec operator()(const ConstUnion& n) const { return z | n.add; }
        AtomVec operator()(const ImageUnion& n) const {
            AtomVec out = z;
            for (Atom a : z) out.insert(n.g(a));
            return out;
        }
        AtomVec operator()(const PermImage& n) const { return act_vec(n.p, z); }
        AtomVec operator()(const UnionOf& n) const { return (*n.l)(z) | (*n.r)(z); }
        AtomVec operator()(const ComposeOf& n) const { return (*n.outer)((*n.inner)(z)); }
        AtomVec operator()(const Opaque& n) const { return n.fn(z); }
    };
    return std::visit(Visitor{z}, node_);
}

AtomVec MonotoneMap::support() const {
    struct Visitor {
        AtomVec operator()(const Identity&) const { return {}; }
        AtomVec operator()(const ConstUnion& n) const { return n.add; }
        AtomVec operator()(const ImageUnion& n) const { return n.g.normalized().carrier(); }
        AtomVec operator()(const PermImage& n) const { return n.p.moved(); }
        AtomVec operator()(const UnionOf& n) const { return n.l->support() | n.r->support(); }
        AtomVec operator()(const ComposeOf& n) const {
            return n.outer->support() | n.inner->support();
        }
        AtomVec operator()(const Opaque& n) const { return n.declared; }
    };
    return std::visit(Visitor{}, node_);
}

bool MonotoneMap::structurally_progressive() const {
    struct Visitor {
        bool operator()(const Identity&) const { return true; }
        bool operator()(const ConstUnion&) const { return true; }
        bool operator()(const ImageUnion&) const { return true; }
        bool operator()(const PermImage& n) const { return n.p.is_identity(); }
        bool operator()(const UnionOf& n) const {
            return n.l->structurally_progressive() || n.r->structurally_progressive();
        }
        bool operator()(const ComposeOf& n) const {
            return n.outer->structurally_progressive() && n.inner->structurally_progressive();
        }
        bool operator()(const Opaque&) const { return false; }
    };
    return std::visit(Visitor{}, node_);
}

bool MonotoneMap::is_opaque() const {
    struct Visitor {
        bool operator()(const Opaque&) const { return true; }
        bool operator()(const UnionOf& n) const { return n.l->is_opaque() || n.r->is_opaque(); }
        bool operator()(const ComposeOf& n) const {
            return n.outer->is_opaque() || n.inner->is_opaque();
        }
        bool operator()(const Identity&) const { return false; }
        bool operator()(const ConstUnion&) const { return false; }
        bool operator()(const ImageUnion&) const { return false; }
        bool operator()(const PermImage&) const { return false; }
    };
    return std::visit(Visitor{}, node_);
}

std::string MonotoneMap::to_string() const {
    struct Visitor {
        std::string operator()(const Identity&) const { return "id"; }
        std::string operator()(const ConstUnion& n) const { return "cup" + n.add.to_string(); }
        std::string operator()(const ImageUnion& n) const { return "img(" + n.g.to_string() + ")"; }
        std::string operator()(const PermImage& n) const { return "perm(" + n.p.to_string() + ")"; }
        std::string operator()(const UnionOf& n) const {
            return "(" + n.l->to_string() + " | " + n.r->to_string() + ")";
        }
        std::string operator()(const ComposeOf& n) const {
            return "(" + n.outer->to_string() + " ; " + n.inner->to_string() + ")";
        }
        std::string operator()(const Opaque& n) const { return "opaque:" + n.name; }
    };
    return std::visit(Visitor{}, node_);
}

MonotoneMap conjugate(const Perm& p, const MonotoneMap& m) {
    struct Visitor {
        const Perm& p;
        MonotoneMap operator()(const MonotoneMap::Identity&) const {
            return MonotoneMap::identity();
        }
        MonotoneMap operator()(const MonotoneMap::ConstUnion& n) const {
            return MonotoneMap::const_union(act_vec(p, n.add));
        }
        MonotoneMap operator()(const MonotoneMap::ImageUnion& n) const {
            return MonotoneMap::image_union(conjugate(p, n.g));
        }
        MonotoneMap operator()(const MonotoneMap::PermImage& n) const {
            return MonotoneMap::perm_image(compose(compose(p, n.p), p.inverse()));
        }
        MonotoneMap operator()(const MonotoneMap::UnionOf& n) const {
            return MonotoneMap::union_of(conjugate(p, *n.l), conjugate(p, *n.r));
        }
        MonotoneMap operator()(const MonotoneMap::ComposeOf& n) const {
            return MonotoneMap::compose_of(conjugate(p, *n.outer), conjugate(p, *n.inner));
        }
        MonotoneMap operator()(const MonotoneMap::Opaque& n) const {
            auto fn = n.fn;
            Perm q = p, qinv = p.inverse();
            return MonotoneMap::opaque(
                [fn, q, qinv](const AtomVec& z) { return act_vec(q, fn(act_vec(qinv, z))); },
                act_vec(p, n.declared), n.name + "'");
        }
    };
    return std::visit(Visitor{p}, m.node_);
}

namespace {

// Opaque maps carry an unverified support claim; refute cheap instances of
// it before trusting the termination bound.
void spot_check_support_claim(const MonotoneMap& m) {
    if (!m.is_opaque()) return;
    AtomVec declared = m.support();
    AtomVec pool = declared | AtomVec(fresh_atoms(3));
    std::vector<AtomVec> probes = {AtomVec{}, declared, pool};
    for (const Perm& p : sample_fix(declared, pool, 8, 0x5eed)) {
        for (const AtomVec& z : probes) {
            if (m(act_vec(p, z)) != act_vec(p, m(z)))
                throw FixpointError(FailureKind::SupportClaimViolation,
                                    "conjugation sampling refuted the declared support of " +
                                        m.to_string(),
                                    {});
        }
    }
}

FixpointResult iterate_impl(const MonotoneMap& m, const AtomVec& z0, std::size_t max_iter,
                            bool require_progressive) {
    spot_check_support_claim(m);
    AtomVec bound_set = m.support() | z0;
    std::size_t bound = bound_set.size() + 1;
    if (max_iter == 0) max_iter = bound_set.size() + 2;
    bool check_steps = require_progressive && !m.structurally_progressive();

    std::vector<AtomVec> chain{z0};
    AtomVec cur = z0;
    for (std::size_t step = 0;; ++step) {
        AtomVec next = m(cur);
        chain.push_back(next);
        if (check_steps && !cur.subset_of(next))
            throw FixpointError(FailureKind::ProgressivityViolation,
                                "progressivity violated: f(Z) does not include Z", chain);
        if (!next.subset_of(bound_set))
            throw FixpointError(FailureKind::SupportClaimViolation,
                                "iterate escaped the declared support", chain);
        if (next == cur) return FixpointResult{cur, step, std::move(chain)};
        if (step + 1 > bound || step + 1 > max_iter)
            throw FixpointError(FailureKind::BoundExceeded,
                                "iteration did not stabilize within the support bound", chain);
        cur = std::move(next);
    }
}

std::mt19937_64 seeded(std::uint64_t seed) { return std::mt19937_64(seed); }

AtomVec random_subset(const AtomVec& pool, std::mt19937_64& rng) {
    AtomVec out;
    std::uniform_int_distribution<int> coin(0, 1);
    for (Atom a : pool)
        if (coin(rng)) out.insert(a);
    return out;
}

}  // namespace

FixpointResult lfp_from_empty(const MonotoneMap& m, std::size_t max_iter) {
    return iterate_impl(m, AtomVec{}, max_iter, false);
}

FixpointResult iterate_to_fix(const MonotoneMap& m, const AtomVec& z0, std::size_t max_iter) {
    return iterate_impl(m, z0, max_iter, true);
}

std::string ProgressiveReport::to_string() const {
    std::string s = std::to_string(passes) + "/" + std::to_string(samples.size()) +
                    " sampled supersets of supp(f) are fixed points";
    for (const SampleCheck& c : samples)
        if (!c.ok)
            s += "\n  not fixed: f(" + c.input.to_string() + ") = " + c.output.to_string();
    return s;
}

ProgressiveReport progressive_fixed_points_check(const MonotoneMap& m, std::size_t samples,
                                                 std::uint64_t seed) {
    ProgressiveReport report;
    AtomVec support = m.support();
    AtomVec extras(fresh_atoms(4));
    auto rng = seeded(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        AtomVec z = support | random_subset(extras, rng);
        AtomVec fz = m(z);
        bool ok = fz == z;
        report.passes += ok ? 1 : 0;
        report.samples.push_back({std::move(z), std::move(fz), ok});
    }
    return report;
}

std::string StrictReport::to_string() const {
    return std::to_string(passes) + " pass, " + std::to_string(failures) + " fail, " +
           std::to_string(not_strict) + " n/a (map not strictly order-preserving there)";
}

StrictReport strict_monotone_fixed_points_check(const MonotoneMap& m, std::size_t samples,
                                                std::uint64_t seed) {
    StrictReport report;
    AtomVec support = m.support();
    AtomVec extras(fresh_atoms(4));
    auto rng = seeded(seed);

    auto strictly_increases = [&](const AtomVec& small, const AtomVec& large) {
        AtomVec fs = m(small), fl = m(large);
        return fs.subset_of(fl) && fs != fl;
    };

    for (std::size_t i = 0; i < samples; ++i) {
        StrictSample sample;
        sample.input = support | random_subset(extras, rng);
        sample.candidate = sample.input - support;

        // probe strict order preservation on pairs around the candidate;
        // growing by a support atom is where inflationary maps flatten out
        bool strict = true;
        for (const AtomVec& base : {AtomVec{}, sample.candidate}) {
            for (Atom t : support | extras) {
                if (base.contains(t)) continue;
                AtomVec larger = base;
                larger.insert(t);
                if (!strictly_increases(base, larger)) {
                    strict = false;
                    break;
                }
            }
            if (!strict) break;
        }

        if (!strict) {
            sample.status = StrictStatus::NotStrict;
            report.not_strict++;
        } else if (m(sample.candidate) == sample.candidate) {
            sample.status = StrictStatus::Pass;
            report.passes++;
        } else {
            sample.status = StrictStatus::Fail;
            report.failures++;
        }
        report.samples.push_back(std::move(sample));
    }
    return report;
}

}  // namespace nominal::fixpoint
