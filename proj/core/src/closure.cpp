#include "origami/closure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "origami/literal.hpp"

namespace origami {

namespace {

bool is_prime_u(unsigned n) {
    if (n < 2) return false;
    for (unsigned p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

}  // namespace

ClosureSet::ClosureSet(unsigned n) : order_(n), field_(Field::make(2 * n)) {}

ClosureSet ClosureSet::seeds(unsigned n) {
    if (n < 3) throw std::invalid_argument("ClosureSet: angle group must have at least 3 elements");
    ClosureSet cs(n);
    cs.frontier_.push_back(cs.insert(CycNum::zero(cs.field_), 0, std::nullopt));
    cs.frontier_.push_back(cs.insert(CycNum::one(cs.field_), 0, std::nullopt));
    cs.per_depth_counts_.push_back(2);
    return cs;
}

ClosureSet ClosureSet::generate(unsigned n, unsigned depth, std::size_t budget) {
    ClosureSet cs = seeds(n);
    for (unsigned d = 0; d < depth && !cs.budget_exhausted_; ++d) cs.expand(budget);
    return cs;
}

std::size_t ClosureSet::insert(CycNum value, unsigned depth, std::optional<Witness> witness) {
    const std::size_t idx = points_.size();
    index_.emplace(value, idx);
    points_.push_back(Entry{std::move(value), depth, std::move(witness)});
    return idx;
}

void ClosureSet::expand(std::size_t budget) {
    const std::size_t snapshot = points_.size();
    const unsigned new_depth = rounds_ + 1;

    // canonical-order views of the round's frontier and older points
    std::vector<std::size_t> frontier_sorted = frontier_;
    std::vector<std::size_t> old_sorted;
    old_sorted.reserve(snapshot - frontier_.size());
    for (std::size_t i = 0; i < snapshot; ++i)
        if (points_[i].depth < rounds_) old_sorted.push_back(i);
    auto by_value = [&](std::size_t a, std::size_t b) {
        return points_[a].value < points_[b].value;
    };
    std::sort(frontier_sorted.begin(), frontier_sorted.end(), by_value);
    std::sort(old_sorted.begin(), old_sorted.end(), by_value);

    std::vector<CycNum> conj_pts;
    conj_pts.reserve(snapshot);
    for (std::size_t i = 0; i < snapshot; ++i) conj_pts.push_back(points_[i].value.conj());

    std::vector<std::size_t> all_sorted;
    all_sorted.reserve(snapshot);
    std::merge(frontier_sorted.begin(), frontier_sorted.end(), old_sorted.begin(),
               old_sorted.end(), std::back_inserter(all_sorted), by_value);

    std::size_t new_count = 0;

    for (unsigned uk = 0; uk < order_ && !budget_exhausted_; ++uk) {
        for (unsigned vk = 0; vk < order_ && !budget_exhausted_; ++vk) {
            if (uk == vk) continue;
            const Angle u(order_, uk), v(order_, vk);
            const RealLinearMap half_uv = convexity_maps(u, v, field_).A;
            const RealLinearMap half_vu = convexity_maps(v, u, field_).A;

            // I(u,v,p,0) and I(v,u,q,0) for every point of the snapshot
            std::vector<CycNum> hp, hq;
            hp.reserve(snapshot);
            hq.reserve(snapshot);
            for (std::size_t i = 0; i < snapshot; ++i) {
                hp.push_back(half_uv.a * points_[i].value + half_uv.b * conj_pts[i]);
                hq.push_back(half_vu.a * points_[i].value + half_vu.b * conj_pts[i]);
            }

            auto consider = [&](std::size_t pi, std::size_t qi) {
                CycNum candidate = hp[pi] + hq[qi];
                if (index_.find(candidate) != index_.end()) return;
                if (points_.size() >= budget) {
                    budget_exhausted_ = true;
                    return;
                }
                insert(std::move(candidate), new_depth, Witness{u, v, pi, qi});
                ++new_count;
            };

            // pairs exhausted in earlier rounds are skipped: p in the
            // frontier against everything, then older p against the frontier
            for (std::size_t pi : frontier_sorted) {
                if (budget_exhausted_) break;
                for (std::size_t qi : all_sorted) {
                    if (budget_exhausted_) break;
                    consider(pi, qi);
                }
            }
            for (std::size_t pi : old_sorted) {
                if (budget_exhausted_) break;
                for (std::size_t qi : frontier_sorted) {
                    if (budget_exhausted_) break;
                    consider(pi, qi);
                }
            }
        }
    }

    rounds_ += 1;
    per_depth_counts_.push_back(new_count);
    frontier_.clear();
    for (std::size_t i = snapshot; i < points_.size(); ++i) frontier_.push_back(i);
}

std::optional<unsigned> ClosureSet::contains_point(const CycNum& target) const {
    if (target.conductor() != field_->conductor())
        throw std::invalid_argument("contains_point: target conductor must be 2n");
    auto it = index_.find(target);
    if (it == index_.end()) return std::nullopt;
    return points_[it->second].depth;
}

void ClosureSet::write_points(std::ostream& os) const {
    os << "# origami-points n=" << order_ << " rounds=" << rounds_ << " count=" << points_.size()
       << " complete=" << (budget_exhausted_ ? 0 : 1) << "\n";
    std::vector<std::size_t> order(points_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return points_[a].value < points_[b].value; });
    for (std::size_t i : order) {
        const std::complex<double> z = points_[i].value.to_complex();
        os << to_literal(points_[i].value) << "\t" << format_double(z.real()) << " "
           << format_double(z.imag()) << "\n";
    }
}

PointSetFile read_points(std::istream& is) {
    PointSetFile out;
    std::string line;
    if (!std::getline(is, line) || line.rfind("# origami-points", 0) != 0)
        throw parse_error(0, "missing point-set header");
    std::istringstream hs(line.substr(std::string("# origami-points").size()));
    std::string token;
    while (hs >> token) {
        auto eq = token.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = token.substr(0, eq);
        const std::string val = token.substr(eq + 1);
        if (key == "n") out.n = static_cast<unsigned>(std::stoul(val));
        else if (key == "rounds") out.rounds = static_cast<unsigned>(std::stoul(val));
        else if (key == "complete") out.complete = val != "0";
    }
    if (out.n < 3) throw parse_error(0, "point-set header: invalid n");
    FieldPtr field = Field::make(2 * out.n);
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        const auto tab = line.find('\t');
        const std::string lit = tab == std::string::npos ? line : line.substr(0, tab);
        try {
            out.points.push_back(parse_exact_literal(lit, field));
        } catch (const parse_error& e) {
            throw parse_error(lineno, std::string("bad point literal: ") + e.what());
        }
    }
    return out;
}

DensityProbe density_probe(unsigned n) {
    if (n < 4)
        throw std::invalid_argument(
            "density_probe: requires n >= 4 (the n = 3 ring is a discrete lattice)");
    FieldPtr field = Field::make(2 * n);
    CycNum value = CycNum::zero(field);
    if (is_prime_u(n)) {
        // 1/(1+zeta_n) = (1-zeta_n)/(1-zeta_n^2), a unit inside the unit circle
        value = (CycNum::one(field) + CycNum::zeta_pow(field, 2)).inv();
    } else {
        value = CycNum::from_rational(field, Rational(1, n));
    }
    return {value, std::abs(value.to_complex())};
}

}  // namespace origami
