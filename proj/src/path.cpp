#include "corelab/path.hpp"

#include "corelab/error.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <sstream>

namespace corelab {

namespace {

std::uint64_t add_checked(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow("path count exceeds 64 bits");
    return r;
}

std::uint64_t mul_checked(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow("path count exceeds 64 bits");
    return r;
}

std::vector<Step> alphabet(int kparam) {
    std::vector<Step> out{Step::up(), Step::down()};
    for (int l = 1; l <= kparam - 1; ++l) out.push_back(Step::horiz(l));
    return out;
}

// Completions from (remaining width, height) under a family's shape rules.
class Completions {
public:
    explicit Completions(const FamilySpec& f) : f_(f), steps_(alphabet(f.kparam)) {}

    std::uint64_t ways(int rem, int h) {
        if (f_.ballot && h < 0) return 0;
        if (rem == 0) return (!f_.height || *f_.height == h) ? 1 : 0;
        if (f_.height && std::abs(*f_.height - h) * f_.kparam > rem) return 0;
        auto key = std::make_pair(rem, h);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        std::uint64_t total = 0;
        for (const Step& st : steps_) {
            const int w = step_width(st, f_.kparam);
            if (w <= rem) total = add_checked(total, ways(rem - w, h + st.rise()));
        }
        memo_[key] = total;
        return total;
    }

    const std::vector<Step>& steps() const { return steps_; }

private:
    const FamilySpec& f_;
    std::vector<Step> steps_;
    std::map<std::pair<int, int>, std::uint64_t> memo_;
};

void check_family(const FamilySpec& f) {
    if (f.kparam < 1) throw InvalidInput("kparam must be positive");
    if (f.width2 < 0) throw InvalidInput("family width must be nonnegative");
}

} // namespace

Step Step::horiz(int len) {
    if (len < 1) throw InvalidInput("horizontal step length must be positive, got " + std::to_string(len));
    return {Kind::Horiz, len};
}

int Step::rise() const noexcept {
    return kind == Kind::Up ? 1 : kind == Kind::Down ? -1 : 0;
}

bool PathWord::operator<(const PathWord& o) const {
    if (steps != o.steps) return std::lexicographical_compare(steps.begin(), steps.end(), o.steps.begin(), o.steps.end());
    return kparam < o.kparam;
}

int step_width(const Step& st, int kparam) {
    return st.is_horiz() ? 2 * st.len : kparam;
}

Profile profile(const PathWord& w) {
    Profile p;
    int h = 0;
    for (const Step& st : w.steps) {
        p.width2 += step_width(st, w.kparam);
        h += st.rise();
        p.min_height = std::min(p.min_height, h);
    }
    p.final_height = h;
    return p;
}

std::vector<int> heights(const PathWord& w) {
    std::vector<int> out{0};
    for (const Step& st : w.steps) out.push_back(out.back() + st.rise());
    return out;
}

int final_height(const PathWord& w) {
    int h = 0;
    for (const Step& st : w.steps) h += st.rise();
    return h;
}

FamilySpec FamilySpec::dyck(int s, int k) { return {2 * s, k, 0, true, false}; }
FamilySpec FamilySpec::ballot_any(int width2, int kparam) { return {width2, kparam, std::nullopt, true, false}; }
FamilySpec FamilySpec::free(int width2, int kparam, int height) { return {width2, kparam, height, false, false}; }
FamilySpec FamilySpec::fb_prime(int width2, int kparam, int height) { return {width2, kparam, height, false, true}; }

bool matches(const PathWord& w, const FamilySpec& f) {
    if (w.kparam != f.kparam) return false;
    for (const Step& st : w.steps)
        if (st.is_horiz() && st.len > f.kparam - 1) return false;
    const Profile p = profile(w);
    if (p.width2 != f.width2) return false;
    if (f.height && p.final_height != *f.height) return false;
    if (f.ballot && p.min_height < 0) return false;
    if (f.restricted_start) {
        if (w.empty()) return f.width2 == 0 && f.height.value_or(0) == 0;
        if (w.steps.front().is_up()) return false;
    }
    return true;
}

PathWord complement(const PathWord& w) {
    PathWord out = w;
    for (Step& st : out.steps) {
        if (st.is_up()) st = Step::down();
        else if (st.is_down()) st = Step::up();
    }
    return out;
}

PathWord reverse_complement(const PathWord& w) {
    PathWord out = complement(w);
    std::reverse(out.steps.begin(), out.steps.end());
    return out;
}

bool is_symmetric(const PathWord& w) {
    return w == reverse_complement(w);
}

PathWord concat(const PathWord& a, const PathWord& b) {
    if (a.kparam != b.kparam) throw InvalidInput("cannot join words with different kparam");
    PathWord out = a;
    out.steps.insert(out.steps.end(), b.steps.begin(), b.steps.end());
    return out;
}

PathWord slice(const PathWord& w, std::size_t from, std::size_t to) {
    if (from > to || to > w.size()) throw InvalidInput("word slice out of range");
    return {{w.steps.begin() + static_cast<std::ptrdiff_t>(from), w.steps.begin() + static_cast<std::ptrdiff_t>(to)},
            w.kparam};
}

void for_each_word(const FamilySpec& f, const std::function<void(const PathWord&)>& visit,
                   const EnumLimits& limits) {
    check_family(f);
    PathWord cur{{}, f.kparam};
    if (f.width2 == 0) {
        if (matches(cur, f)) visit(cur);
        return;
    }
    Completions c(f);
    std::size_t produced = 0;
    std::size_t nodes = 0;
    auto go = [&](auto&& self, int rem, int h) -> void {
        if ((++nodes & 0xFFF) == 0) limits.deadline.check();
        if (rem == 0) {
            if (++produced > limits.cap)
                throw Overflow("path enumeration exceeded cap of " + std::to_string(limits.cap));
            visit(cur);
            return;
        }
        for (const Step& st : c.steps()) {
            if (f.restricted_start && cur.empty() && st.is_up()) continue;
            const int w = step_width(st, f.kparam);
            if (w > rem || c.ways(rem - w, h + st.rise()) == 0) continue;
            cur.steps.push_back(st);
            self(self, rem - w, h + st.rise());
            cur.steps.pop_back();
        }
    };
    if (c.ways(f.width2, 0) > 0) go(go, f.width2, 0);
}

std::vector<PathWord> enumerate(const FamilySpec& f, const EnumLimits& limits) {
    std::vector<PathWord> out;
    for_each_word(f, [&](const PathWord& w) { out.push_back(w); }, limits);
    return out;
}

std::uint64_t count(const FamilySpec& f) {
    check_family(f);
    if (f.width2 == 0) return matches(PathWord{{}, f.kparam}, f) ? 1 : 0;
    Completions c(f);
    if (!f.restricted_start) return c.ways(f.width2, 0);
    std::uint64_t total = 0;
    for (const Step& st : c.steps()) {
        const int w = step_width(st, f.kparam);
        if (st.is_up() || w > f.width2) continue;
        total = add_checked(total, c.ways(f.width2 - w, st.rise()));
    }
    return total;
}

std::vector<PathWord> enumerate_symmetric_dyck(int s, int k, const EnumLimits& limits) {
    if (s < 0 || k < 1) throw InvalidInput("symmetric Dyck words need s >= 0 and k >= 1");
    std::vector<PathWord> out;
    for (int l = 0; l <= std::min(k - 1, s); ++l) {
        for (const PathWord& q : enumerate(FamilySpec::ballot_any(s - l, k), limits)) {
            PathWord w = q;
            if (l > 0) w.steps.push_back(Step::horiz(l));
            w = concat(w, reverse_complement(q));
            out.push_back(std::move(w));
            if (out.size() > limits.cap)
                throw Overflow("symmetric Dyck enumeration exceeded cap of " + std::to_string(limits.cap));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t count_symmetric_dyck(int s, int k) {
    if (s < 0 || k < 1) throw InvalidInput("symmetric Dyck words need s >= 0 and k >= 1");
    std::uint64_t total = 0;
    for (int l = 0; l <= std::min(k - 1, s); ++l) total = add_checked(total, count(FamilySpec::ballot_any(s - l, k)));
    return total;
}

std::uint64_t motzkin(int n) {
    if (n < 0) throw InvalidInput("motzkin needs n >= 0");
    std::vector<std::uint64_t> m{1};
    for (int i = 0; i < n; ++i) {
        std::uint64_t next = m[static_cast<std::size_t>(i)];
        for (int j = 0; j <= i - 1; ++j)
            next = add_checked(next, mul_checked(m[static_cast<std::size_t>(j)], m[static_cast<std::size_t>(i - 1 - j)]));
        m.push_back(next);
    }
    return m.back();
}

PathWord parse_word(std::string_view text, int kparam) {
    if (kparam < 1) throw InvalidInput("kparam must be positive");
    PathWord w{{}, kparam};
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        if (tok == "U") {
            w.steps.push_back(Step::up());
        } else if (tok == "D") {
            w.steps.push_back(Step::down());
        } else if (tok.size() > 1 && tok[0] == 'H') {
            int len = 0;
            auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), len);
            if (ec != std::errc{} || ptr != tok.data() + tok.size())
                throw InvalidInput("bad step token '" + tok + "'");
            w.steps.push_back(Step::horiz(len));
        } else {
            throw InvalidInput("bad step token '" + tok + "'");
        }
    }
    return w;
}

std::string to_string(const Step& st) {
    if (st.is_up()) return "U";
    if (st.is_down()) return "D";
    return "H" + std::to_string(st.len);
}

std::string to_string(const PathWord& w) {
    std::string out;
    for (const Step& st : w.steps) {
        if (!out.empty()) out += ' ';
        out += to_string(st);
    }
    return out;
}

} // namespace corelab
