#include "corelab/bijection.hpp"

#include "corelab/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace corelab {

namespace {

std::string show(const PathWord& w) { return "'" + to_string(w) + "'"; }

PathWord with_horiz(PathWord w, int len) {
    if (len < 0) throw InternalError("negative horizontal length in a fold");
    if (len > 0) w.steps.push_back(Step::horiz(len));
    return w;
}

PathWord prepend(const Step& st, const PathWord& w) {
    PathWord out{{st}, w.kparam};
    out.steps.insert(out.steps.end(), w.steps.begin(), w.steps.end());
    return out;
}

// Index of the first point of minimal height (split == lowest) or the last point at height target.
std::size_t first_lowest(const std::vector<int>& hs) {
    return static_cast<std::size_t>(std::min_element(hs.begin(), hs.end()) - hs.begin());
}

std::size_t last_at(const std::vector<int>& hs, int target) {
    for (std::size_t i = hs.size(); i-- > 0;)
        if (hs[i] == target) return i;
    throw InvalidInput("word never reaches height " + std::to_string(target));
}

bool is_ballot(const PathWord& w) { return profile(w).min_height >= 0; }

// ---------------------------------------------------------------- walks

struct Grid {
    int amax2 = 0;
    int up_width = 0;
    int reach = 0;
    bool visible_only = false;
};

Grid phi_grid(int m, int k) { return {2 * (m + 1), 2 * k, 2 * k - 1, false}; }
Grid psi_grid(int m, int k) { return {2 * m + 1, 2 * k + 1, 2 * k, true}; }

bool on_lattice(const Grid& g, int a2, int b) {
    if (a2 < 0 || a2 > g.amax2) return false;
    if (g.visible_only) return std::abs(a2 - b) % 2 == 0;
    return a2 % 2 == 0;
}

bool is_black(const Grid& g, const PlanarIdeal& ideal, int a2, int b) {
    if (!on_lattice(g, a2, b)) return false;
    const bool in = ideal.contains({a2, b});
    return b >= 0 ? in : !in;
}

PathWord run_walk(const Grid& g, const PlanarIdeal& ideal) {
    PathWord w{{}, g.up_width};
    int a2 = 0;
    int b = 0;
    for (;;) {
        const bool up_black = is_black(g, ideal, a2 + g.up_width, b + 1);
        const bool down_black = is_black(g, ideal, a2 + g.up_width, b - 1);
        int level = 0;
        for (int l = 1; l <= g.reach && level == 0; ++l)
            if (is_black(g, ideal, a2 + 2 * l, b)) level = l;
        if (g.reach == 0) {
            // No horizontal steps exist: move diagonally while a target is black.
            if (up_black) {
                w.steps.push_back(Step::up());
                a2 += g.up_width, ++b;
            } else if (down_black) {
                w.steps.push_back(Step::down());
                a2 += g.up_width, --b;
            } else {
                break;
            }
        } else if (level > 0) {
            if (up_black) {
                w.steps.push_back(Step::up());
                a2 += g.up_width, ++b;
            } else {
                w.steps.push_back(Step::horiz(level));
                a2 += 2 * level;
            }
        } else if (down_black) {
            w.steps.push_back(Step::down());
            a2 += g.up_width, --b;
        } else {
            break;
        }
    }
    return w;
}

enum class Place { Below, On, Above, Right };

struct Trace {
    std::vector<PlanarPoint> vertices;

    explicit Trace(const PathWord& w) {
        vertices.push_back({0, 0});
        for (const Step& st : w.steps) {
            const PlanarPoint last = vertices.back();
            vertices.push_back({last.a2 + step_width(st, w.kparam), last.b + st.rise()});
        }
    }

    bool is_step_end(PlanarPoint p) const {
        return std::find(vertices.begin() + 1, vertices.end(), p) != vertices.end();
    }

    Place place(int a2, int b) const {
        if (a2 > vertices.back().a2) return Place::Right;
        if (vertices.size() == 1) return b > 0 ? Place::Above : b < 0 ? Place::Below : Place::On;
        for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
            const PlanarPoint p = vertices[i];
            const PlanarPoint q = vertices[i + 1];
            if (a2 < p.a2 || a2 > q.a2) continue;
            const long long span = q.a2 - p.a2;
            const long long lhs = static_cast<long long>(b) * span;
            const long long rhs = static_cast<long long>(p.b) * span + static_cast<long long>(q.b - p.b) * (a2 - p.a2);
            return lhs > rhs ? Place::Above : lhs < rhs ? Place::Below : Place::On;
        }
        throw InternalError("point left of the trace");
    }

    bool expected_black(int a2, int b) const {
        switch (place(a2, b)) {
        case Place::Below: return true;
        case Place::Above: return false;
        case Place::On: return is_step_end({a2, b});
        case Place::Right: return b < 0;
        }
        return false;
    }
};

PlanarIdeal recolor(const Grid& g, const PlanarPoset& poset, const PathWord& w) {
    const Trace trace(w);
    PlanarIdeal ideal{poset.s(), poset.k(), {}};
    for (PlanarPoint p : poset.elements()) {
        if (!on_lattice(g, p.a2, p.b)) continue;
        const bool black = trace.expected_black(p.a2, p.b);
        if (p.b >= 0 ? black : !black) ideal.members.push_back(p);
    }
    return ideal;
}

void require_admissible(const PlanarPoset& poset, const PlanarIdeal& ideal) {
    if (!is_down_closed(poset, ideal.members))
        throw InvalidInput("members do not form an order ideal of P'(" + std::to_string(poset.s()) + "," +
                           std::to_string(poset.k()) + ")");
    if (!is_admissible(poset.k(), ideal.members)) throw InvalidInput("ideal is not admissible");
}

void require_m(int m, int k, int k_min) {
    if (m < 1 || k < k_min)
        throw InvalidInput("need m >= 1 and k >= " + std::to_string(k_min) + ", got m=" + std::to_string(m) +
                           " k=" + std::to_string(k));
}

// ---------------------------------------------------------------- word families

std::vector<FamilySpec> q_specs(int m, int k) {
    std::vector<FamilySpec> out;
    for (int i = 0; i <= k - 2; ++i)
        if (m - i >= 0) out.push_back(FamilySpec::fb_prime(2 * (m - i), 2 * k, 0));
    out.push_back(FamilySpec::fb_prime(2 * (m + 1), 2 * k, -1));
    return out;
}

std::vector<FamilySpec> q_prime_specs(int m, int k) {
    std::vector<FamilySpec> out;
    for (int i = 0; i <= k - 1; ++i)
        if (m - i >= 0) out.push_back(FamilySpec::fb_prime(2 * (m - i), 2 * k + 1, 0));
    out.push_back(FamilySpec::fb_prime(2 * m + 1, 2 * k + 1, -1));
    return out;
}

std::vector<FamilySpec> q_star_specs(int m, int k) {
    std::vector<FamilySpec> out;
    for (int i = 1; i <= k - 1; ++i)
        if (m + 1 - i >= 0) out.push_back(FamilySpec::fb_prime(2 * (m + 1 - i), 2 * k + 1, 0));
    out.push_back(FamilySpec::fb_prime(2 * m + 3, 2 * k + 1, -1));
    return out;
}

bool ends_with_up(const PathWord& w) { return !w.empty() && w.steps.back().is_up(); }

std::vector<PathWord> union_of(const std::vector<FamilySpec>& specs, const EnumLimits& limits) {
    std::vector<PathWord> out;
    for (const FamilySpec& f : specs) {
        auto part = enumerate(f, limits);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool in_any(const std::vector<FamilySpec>& specs, const PathWord& w) {
    return std::any_of(specs.begin(), specs.end(), [&](const FamilySpec& f) { return matches(w, f); });
}

// ---------------------------------------------------------------- folds

struct FoldRules {
    int k = 0;
    int kparam = 0;
    int base = 0;
    // Flanked cases: middle H_{2i - zero_shift} for i in [i_lo, i_hi].
    int i_lo = 0;
    int i_hi = 0;
    int zero_shift = 0;
    // Single horizontal start H_l with l <= l3_hi: middle H_{2l - shift3}.
    int l3_hi = 0;
    int shift3 = 0;
    // Larger l: U H_{2(l-k-1) - shift4} D.
    int shift4 = 0;
    int mid5 = 0;
    int out_width2 = 0;
    int origin_mid = 0;
    bool diagonal_only = false;
};

FoldRules rules(Fold map, int m, int k) {
    switch (map) {
    case Fold::Delta:
        require_m(m, k, 1);
        return {k, 2 * k, m, 0, k - 2, 0, k, 2, 0, 2 * k - 2, 4 * m, 2 * m, false};
    case Fold::Gamma:
        require_m(m, k, 0);
        return {k, 2 * k + 1, m, 0, k - 1, 0, k, 1, 0, 2 * k, 4 * m, 2 * m, false};
    case Fold::Eta:
        require_m(m, k, 0);
        return {k, 2 * k + 1, m + 1, 1, k - 1, 1, k + 1, 2, 1, 2 * k - 1, 4 * m + 2, 2 * m + 1, k == 0};
    }
    throw InternalError("unknown fold");
}

bool in_domain(Fold map, int m, int k, const PathWord& w) {
    switch (map) {
    case Fold::Delta: return in_q_family(m, k, w);
    case Fold::Gamma: return in_q_prime_family(m, k, w);
    case Fold::Eta: return in_q_star_family(m, k, w);
    }
    return false;
}

const char* fold_name(Fold map) {
    switch (map) {
    case Fold::Delta: return "delta";
    case Fold::Gamma: return "gamma";
    case Fold::Eta: return "eta";
    }
    return "?";
}

// A B^rc with an optional middle run.
PathWord mirror(const PathWord& left, const std::vector<Step>& middle) {
    PathWord out = left;
    out.steps.insert(out.steps.end(), middle.begin(), middle.end());
    return concat(out, reverse_complement(left));
}

std::vector<Step> run(std::initializer_list<int> horizontals) {
    std::vector<Step> out;
    for (int len : horizontals) {
        if (len < 0) throw InternalError("negative horizontal length in a fold");
        if (len > 0) out.push_back(Step::horiz(len));
    }
    return out;
}

void require_symmetric_dyck(const FoldRules& r, const PathWord& w, Fold map) {
    const FamilySpec f{r.out_width2, r.kparam, 0, true, false};
    if (!matches(w, f) || !is_symmetric(w))
        throw InvalidInput(std::string(fold_name(map)) + " inverse needs a symmetric Dyck word of width " +
                           std::to_string(r.out_width2) + " half-units, got " + show(w));
}

struct Centre {
    PathWord half;
    int mid = 0;
};

Centre split_centre(const PathWord& w) {
    const std::size_t half = w.size() / 2;
    Centre c{slice(w, 0, half), 0};
    if (w.size() % 2 == 1) {
        const Step& st = w.steps[half];
        if (!st.is_horiz()) throw InvalidInput("central step of " + show(w) + " is not horizontal");
        c.mid = st.len;
    }
    return c;
}

bool odd(int x) { return x % 2 != 0; }

} // namespace

// ---------------------------------------------------------------- alpha / beta

PathWord alpha(const PathWord& w) {
    const auto hs = heights(w);
    if (hs.back() != 0) throw InvalidInput("alpha needs a height-0 word, got " + show(w));
    const std::size_t cut = first_lowest(hs);
    return concat(slice(w, cut, w.size()), reverse_complement(slice(w, 0, cut)));
}

PathWord alpha_inv(const PathWord& w) {
    const auto hs = heights(w);
    if (!is_ballot(w) || odd(hs.back()))
        throw InvalidInput("alpha inverse needs a ballot word of even height, got " + show(w));
    const std::size_t cut = last_at(hs, hs.back() / 2);
    return concat(reverse_complement(slice(w, cut, w.size())), slice(w, 0, cut));
}

PathWord beta(const PathWord& w) {
    const auto hs = heights(w);
    if (hs.back() != -1) throw InvalidInput("beta needs a height -1 word, got " + show(w));
    const std::size_t cut = last_at(hs, 0);
    return concat(alpha(slice(w, 0, cut)), complement(slice(w, cut, w.size())));
}

PathWord beta_inv(const PathWord& w) {
    const auto hs = heights(w);
    if (!is_ballot(w) || !odd(hs.back()))
        throw InvalidInput("beta inverse needs a ballot word of odd height, got " + show(w));
    const std::size_t cut = last_at(hs, hs.back() - 1);
    return concat(alpha_inv(slice(w, 0, cut)), complement(slice(w, cut, w.size())));
}

// ---------------------------------------------------------------- phi / psi

PathWord phi(int m, int k, const PlanarIdeal& ideal) {
    require_m(m, k, 1);
    require_admissible(build_planar_poset(2 * m, 2 * k), ideal);
    return run_walk(phi_grid(m, k), ideal);
}

PlanarIdeal phi_inv(int m, int k, const PathWord& w) {
    require_m(m, k, 1);
    if (!in_q_family(m, k, w)) throw InvalidInput("phi inverse: " + show(w) + " is outside its word family");
    const PlanarPoset poset = build_planar_poset(2 * m, 2 * k);
    PlanarIdeal ideal = recolor(phi_grid(m, k), poset, w);
    require_admissible(poset, ideal);
    if (run_walk(phi_grid(m, k), ideal) != w) throw InternalError("phi inverse did not reproduce " + show(w));
    return ideal;
}

PathWord psi(int m, int k, const PlanarIdeal& ideal) {
    require_m(m, k, 0);
    require_admissible(build_planar_poset(2 * m, 2 * k + 1), ideal);
    return run_walk(psi_grid(m, k), ideal);
}

PlanarIdeal psi_inv(int m, int k, const PathWord& w) {
    require_m(m, k, 0);
    if (!in_q_prime_family(m, k, w)) throw InvalidInput("psi inverse: " + show(w) + " is outside its word family");
    const PlanarPoset poset = build_planar_poset(2 * m, 2 * k + 1);
    PlanarIdeal ideal = recolor(psi_grid(m, k), poset, w);
    require_admissible(poset, ideal);
    if (run_walk(psi_grid(m, k), ideal) != w) throw InternalError("psi inverse did not reproduce " + show(w));
    return ideal;
}

std::optional<PlanarPoint> coloring_violation(Walk walk, int m, int k, const PlanarIdeal& ideal) {
    const bool is_phi = walk == Walk::Phi;
    const Grid g = is_phi ? phi_grid(m, k) : psi_grid(m, k);
    const PathWord w = is_phi ? phi(m, k, ideal) : psi(m, k, ideal);
    const PlanarPoset poset = is_phi ? build_planar_poset(2 * m, 2 * k) : build_planar_poset(2 * m, 2 * k + 1);
    const Trace trace(w);
    const std::vector<int> hs = heights(w);
    int lo = *std::min_element(hs.begin(), hs.end()) - 1;
    int hi = *std::max_element(hs.begin(), hs.end()) + 1;
    for (PlanarPoint p : poset.elements()) {
        lo = std::min(lo, p.b - 1);
        hi = std::max(hi, p.b + 1);
    }
    for (int b = lo; b <= hi; ++b)
        for (int a2 = 0; a2 <= g.amax2; ++a2) {
            if (!on_lattice(g, a2, b)) continue;
            if (is_black(g, ideal, a2, b) != trace.expected_black(a2, b)) return PlanarPoint{a2, b};
        }
    return std::nullopt;
}

// ---------------------------------------------------------------- families

std::vector<PathWord> q_family(int m, int k, const EnumLimits& limits) { return union_of(q_specs(m, k), limits); }

std::vector<PathWord> q_prime_family(int m, int k, const EnumLimits& limits) {
    return union_of(q_prime_specs(m, k), limits);
}

std::vector<PathWord> q_star_family(int m, int k, const EnumLimits& limits) {
    auto out = union_of(q_star_specs(m, k), limits);
    if (k == 0) std::erase_if(out, [](const PathWord& w) { return !ends_with_up(w); });
    return out;
}

bool in_q_family(int m, int k, const PathWord& w) { return in_any(q_specs(m, k), w); }
bool in_q_prime_family(int m, int k, const PathWord& w) { return in_any(q_prime_specs(m, k), w); }

bool in_q_star_family(int m, int k, const PathWord& w) {
    if (!in_any(q_star_specs(m, k), w)) return false;
    return k > 0 || ends_with_up(w);
}

// ---------------------------------------------------------------- delta / gamma / eta

std::string to_string(CaseTag tag) {
    switch (tag) {
    case CaseTag::I: return "i";
    case CaseTag::II: return "ii";
    case CaseTag::III: return "iii";
    case CaseTag::IV: return "iv";
    case CaseTag::V: return "v";
    case CaseTag::Origin: return "origin";
    }
    return "?";
}

CaseTag fold_case(Fold map, int m, int k, const PathWord& w) {
    const FoldRules r = rules(map, m, k);
    if (!in_domain(map, m, k, w))
        throw InvalidInput(std::string(fold_name(map)) + ": " + show(w) + " is outside the domain");
    if (r.diagonal_only) return CaseTag::III;
    if (w.empty()) return CaseTag::Origin;
    const Step& first = w.steps.front();
    if (final_height(w) == 0) return first.is_down() ? CaseTag::II : CaseTag::I;
    if (first.is_down()) return CaseTag::V;
    return first.len <= r.l3_hi ? CaseTag::III : CaseTag::IV;
}

PathWord fold(Fold map, int m, int k, const PathWord& w) {
    const FoldRules r = rules(map, m, k);
    const CaseTag tag = fold_case(map, m, k, w);
    if (r.diagonal_only) {
        const PathWord b = beta(slice(w, 1, w.size() - 1));
        return mirror(b, {});
    }
    if (tag == CaseTag::Origin) return with_horiz(PathWord{{}, r.kparam}, r.origin_mid);
    const Step first = w.steps.front();
    const PathWord rest = slice(w, 1, w.size());
    const int i = r.base - profile(w).width2 / 2;
    const int zero_mid = 2 * i - r.zero_shift;
    switch (tag) {
    case CaseTag::I: {
        std::vector<Step> middle{first};
        for (const Step& st : run({zero_mid})) middle.push_back(st);
        middle.push_back(first);
        return mirror(alpha(rest), middle);
    }
    case CaseTag::II: {
        std::vector<Step> middle{Step::down()};
        for (const Step& st : run({zero_mid})) middle.push_back(st);
        middle.push_back(Step::up());
        return mirror(beta(complement(rest)), middle);
    }
    case CaseTag::III: return mirror(beta(rest), run({2 * first.len - r.shift3}));
    case CaseTag::IV: {
        std::vector<Step> middle{Step::up()};
        for (const Step& st : run({2 * (first.len - r.k - 1) - r.shift4})) middle.push_back(st);
        middle.push_back(Step::down());
        return mirror(beta(rest), middle);
    }
    case CaseTag::V: return mirror(alpha(rest), run({r.mid5}));
    case CaseTag::Origin: break;
    }
    throw InternalError("unhandled fold case");
}

CaseTag unfold_case(Fold map, int m, int k, const PathWord& w) {
    const FoldRules r = rules(map, m, k);
    require_symmetric_dyck(r, w, map);
    const Centre c = split_centre(w);
    if (odd(final_height(c.half))) return CaseTag::III;
    if (c.mid == r.mid5) return CaseTag::V;
    if (c.half.empty()) return CaseTag::Origin;
    const Step& flank = c.half.steps.back();
    if (flank.is_horiz()) return CaseTag::I;
    return flank.is_down() ? CaseTag::II : CaseTag::IV;
}

PathWord unfold(Fold map, int m, int k, const PathWord& w) {
    const FoldRules r = rules(map, m, k);
    const CaseTag tag = unfold_case(map, m, k, w);
    const Centre c = split_centre(w);
    PathWord out{{}, r.kparam};
    if (r.diagonal_only) {
        out = concat(prepend(Step::down(), beta_inv(c.half)), PathWord{{Step::up()}, r.kparam});
    } else {
        const PathWord inner = c.half.empty() ? c.half : slice(c.half, 0, c.half.size() - 1);
        switch (tag) {
        case CaseTag::III:
            if (odd(c.mid + r.shift3)) throw InvalidInput("central run of " + show(w) + " fits no case");
            out = prepend(Step::horiz((c.mid + r.shift3) / 2), beta_inv(c.half));
            break;
        case CaseTag::V: out = prepend(Step::down(), alpha_inv(c.half)); break;
        case CaseTag::Origin: break;
        case CaseTag::I: out = prepend(c.half.steps.back(), alpha_inv(inner)); break;
        case CaseTag::II: out = prepend(Step::down(), complement(beta_inv(inner))); break;
        case CaseTag::IV:
            if (odd(c.mid + r.shift4)) throw InvalidInput("central run of " + show(w) + " fits no case");
            out = prepend(Step::horiz((c.mid + r.shift4) / 2 + r.k + 1), beta_inv(inner));
            break;
        }
    }
    if (!in_domain(map, m, k, out))
        throw InvalidInput(std::string(fold_name(map)) + " inverse: " + show(w) + " fits no case");
    return out;
}

std::set<CaseTag> matching_cases(Fold map, int m, int k, const PathWord& w) {
    const FoldRules r = rules(map, m, k);
    require_symmetric_dyck(r, w, map);
    const std::size_t n = w.size();
    std::set<CaseTag> out;
    auto half_height = [&](std::size_t len) { return final_height(slice(w, 0, len)); };
    auto is_h = [&](std::size_t pos, int len) { return w.steps[pos].is_horiz() && w.steps[pos].len == len; };

    // Shape A [mid] A^rc with A of the given height parity.
    auto plain = [&](int mid, bool odd_height) {
        if (mid < 0) return false;
        const std::size_t c = mid > 0 ? 1 : 0;
        if (n < c || (n - c) % 2 != 0) return false;
        const std::size_t a = (n - c) / 2;
        if (c == 1 && !is_h(a, mid)) return false;
        return odd(half_height(a)) == odd_height;
    };
    // Shape A x [mid] y A^rc.
    auto flanked = [&](int mid, bool odd_height, auto&& flank_ok) {
        if (mid < 0) return false;
        const std::size_t c = mid > 0 ? 1 : 0;
        if (n < 2 + c || (n - 2 - c) % 2 != 0) return false;
        const std::size_t a = (n - 2 - c) / 2;
        if (c == 1 && !is_h(a + 1, mid)) return false;
        if (!flank_ok(w.steps[a], w.steps[a + 1 + c])) return false;
        return odd(half_height(a)) == odd_height;
    };

    if (r.diagonal_only) {
        if (plain(0, true)) out.insert(CaseTag::III);
        return out;
    }
    for (int i = r.i_lo; i <= r.i_hi; ++i) {
        const int mid = 2 * i - r.zero_shift;
        if (flanked(mid, false, [](const Step& x, const Step& y) { return x.is_horiz() && x == y; }))
            out.insert(CaseTag::I);
        if (flanked(mid, true, [](const Step& x, const Step& y) { return x.is_down() && y.is_up(); }))
            out.insert(CaseTag::II);
        if (r.base - i == 0 && n == 1 && is_h(0, r.origin_mid)) out.insert(CaseTag::Origin);
    }
    for (int l = 1; l <= r.l3_hi; ++l)
        if (plain(2 * l - r.shift3, true)) out.insert(CaseTag::III);
    for (int l = r.l3_hi + 1; l <= r.kparam - 1; ++l)
        if (flanked(2 * (l - r.k - 1) - r.shift4, true,
                    [](const Step& x, const Step& y) { return x.is_up() && y.is_down(); }))
            out.insert(CaseTag::IV);
    if (plain(r.mid5, false)) out.insert(CaseTag::V);
    return out;
}

// ---------------------------------------------------------------- xi

PathWord xi(const PathWord& w) {
    if (!is_symmetric(w) || profile(w).min_height < 0 || final_height(w) != 0)
        throw InvalidInput("xi needs a symmetric Dyck word, got " + show(w));
    const std::size_t half = w.size() / 2;
    PathWord out = w;
    if (w.size() % 2 == 0) {
        out.steps.insert(out.steps.begin() + static_cast<std::ptrdiff_t>(half), Step::horiz(1));
    } else {
        const Step& mid = w.steps[half];
        if (!mid.is_horiz() || odd(mid.len)) throw InvalidInput("xi needs an even middle run, got " + show(w));
        out.steps[half] = Step::horiz(mid.len + 1);
    }
    if (out.steps[half].len > w.kparam - 1) throw InvalidInput("xi: widened middle run exceeds the step bound");
    return out;
}

PathWord xi_inv(const PathWord& w) {
    if (!is_symmetric(w) || profile(w).min_height < 0 || final_height(w) != 0 || w.size() % 2 == 0)
        throw InvalidInput("xi inverse needs a symmetric Dyck word with a middle step, got " + show(w));
    const std::size_t half = w.size() / 2;
    const Step& mid = w.steps[half];
    if (!mid.is_horiz() || !odd(mid.len)) throw InvalidInput("xi inverse needs an odd middle run, got " + show(w));
    PathWord out = w;
    if (mid.len == 1) out.steps.erase(out.steps.begin() + static_cast<std::ptrdiff_t>(half));
    else out.steps[half] = Step::horiz(mid.len - 1);
    return out;
}

// ---------------------------------------------------------------- composite

namespace {

void require_chain(int s, int k) {
    if (s < 2 || k < 1)
        throw InvalidInput("the core-path correspondence needs s >= 2 and k >= 1, got s=" + std::to_string(s) +
                           " k=" + std::to_string(k));
}

PlanarIdeal relabel(PlanarIdeal ideal, int s, int k) {
    ideal.s = s;
    ideal.k = k;
    return ideal;
}

} // namespace

PathWord ideal_to_path(int s, int k, const PlanarIdeal& ideal) {
    require_chain(s, k);
    require_admissible(build_planar_poset(s, k), ideal);
    const int m = s / 2;
    const int kh = k / 2;
    if (k % 2 == 0) {
        const PathWord folded = delta(m, kh, phi(m, kh, ideal));
        return s % 2 == 0 ? folded : xi(folded);
    }
    if (s % 2 == 0) return gamma(m, kh, psi(m, kh, ideal));
    return eta(m, kh, psi(m + 1, kh, ideal));
}

PlanarIdeal path_to_ideal(int s, int k, const PathWord& w) {
    require_chain(s, k);
    if (w.kparam != k || !matches(w, FamilySpec::dyck(s, k)) || !is_symmetric(w))
        throw InvalidInput("expected a symmetric (" + std::to_string(s) + "," + std::to_string(k) +
                           ")-Dyck word, got " + show(w));
    const int m = s / 2;
    const int kh = k / 2;
    PlanarIdeal ideal;
    if (k % 2 == 0) ideal = phi_inv(m, kh, delta_inv(m, kh, s % 2 == 0 ? w : xi_inv(w)));
    else if (s % 2 == 0) ideal = psi_inv(m, kh, gamma_inv(m, kh, w));
    else ideal = psi_inv(m + 1, kh, eta_inv(m, kh, w));
    ideal = relabel(std::move(ideal), s, k);
    require_admissible(build_planar_poset(s, k), ideal);
    return ideal;
}

CoreIdeal core_to_ideal(int s, int k, const Partition& core) {
    require_chain(s, k);
    if (!is_self_conjugate(core)) throw InvalidInput("partition is not self-conjugate");
    if (!is_consecutive_core(core, s, k))
        throw InvalidInput("partition is not an (s,...,s+k)-core for s=" + std::to_string(s) + " k=" +
                           std::to_string(k));
    const CorePoset poset = build_core_poset(s, k);
    CoreIdeal ideal = make_ideal(poset, diagonal_hooks(core).ascending());
    if (!is_nice(s, k, ideal.members)) throw InternalError("diagonal hooks of a core form a non-nice ideal");
    return ideal;
}

Partition ideal_to_core(const CoreIdeal& ideal) {
    return from_diagonal_hooks(OddHookSet(ideal.members));
}

PathWord core_to_path(int s, int k, const Partition& core) {
    return ideal_to_path(s, k, chi_image(core_to_ideal(s, k, core)));
}

Partition path_to_core(int s, int k, const PathWord& w) {
    const Partition core = ideal_to_core(chi_preimage(path_to_ideal(s, k, w)));
    if (!is_self_conjugate(core) || !is_consecutive_core(core, s, k))
        throw InternalError("path " + show(w) + " decoded to a partition that is not a core");
    return core;
}

} // namespace corelab
