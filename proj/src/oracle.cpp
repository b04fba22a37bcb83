#include "watermelon/oracle.hpp"

#include <cstdlib>
#include <map>

namespace watermelon {

std::vector<int> heights_of(int start, const std::vector<int>& steps)
{
    std::vector<int> h{start};
    for (int s : steps) h.push_back(h.back() + s);
    return h;
}

bool family_is_valid(const std::vector<int>& starts, const std::vector<int>& ends, const PathFamily& fam)
{
    const std::size_t n = starts.size();
    if (fam.paths.size() != n || ends.size() != n) return false;
    std::vector<std::vector<int>> h;
    for (std::size_t i = 0; i < n; ++i) {
        for (int s : fam.paths[i])
            if (s != 1 && s != -1) return false;
        h.push_back(heights_of(starts[i], fam.paths[i]));
        if (h.back().back() != ends[i]) return false;
        for (int v : h.back())
            if (v < 0) return false;
    }
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t common = std::min(h[i].size(), h[i - 1].size());
        for (std::size_t x = 0; x < common; ++x)
            if (h[i][x] <= h[i - 1][x]) return false;
    }
    return true;
}

long contacts(const WalkerSpec& spec, const PathFamily& fam)
{
    if (static_cast<int>(fam.paths.size()) != spec.n) throw DomainError("family size does not match spec");
    for (const auto& p : fam.paths)
        if (static_cast<int>(p.size()) != spec.t) throw DomainError("path length does not match spec");
    if (!family_is_valid(spec.a, spec.e, fam)) throw DomainError("invalid vicious walker family");
    long c = 0;
    for (int i = 0; i < spec.n; ++i)
        for (int v : heights_of(spec.a[i], fam.paths[i]))
            if (v == 0) {
                if (i != 0) throw InternalError("a walker other than the lowest touched the wall");
                ++c;
            }
    return c;
}

ContactPolynomial oracle_base_case(const WalkerSpec& spec)
{
    if (spec.a != spec.e) return {};
    long zeros = 0;
    for (int v : spec.a) zeros += (v == 0);
    return ContactPolynomial::monomial(1, zeros);
}

ContactPolynomial enumerate_contact_polynomial(const WalkerSpec& spec)
{
    spec.validate();
    if (spec.t == 0) return oracle_base_case(spec);
    const int n = spec.n;
    std::map<HeightState, ContactPolynomial> layer;
    layer[spec.a] = ContactPolynomial::monomial(1, spec.a[0] == 0 ? 1 : 0);
    for (int step = 0; step < spec.t; ++step) {
        const int left = spec.t - step - 1;
        std::map<HeightState, ContactPolynomial> next;
        for (const auto& [h, poly] : layer) {
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                HeightState nh(n);
                bool ok = true;
                for (int i = 0; i < n && ok; ++i) {
                    nh[i] = h[i] + ((mask >> i) & 1u ? -1 : 1);
                    if (nh[i] < 0 || (i > 0 && nh[i] <= nh[i - 1]) || std::abs(nh[i] - spec.e[i]) > left) ok = false;
                }
                if (!ok) continue;
                ContactPolynomial contrib = poly;
                for (int i = 1; i < n; ++i)
                    if (nh[i] == 0) throw InternalError("a walker other than the lowest touched the wall");
                if (nh[0] == 0) contrib *= ContactPolynomial::monomial(1, 1);
                next[nh] += contrib;
            }
        }
        layer = std::move(next);
    }
    auto it = layer.find(spec.e);
    return it == layer.end() ? ContactPolynomial{} : it->second;
}

namespace {

struct FamilySearch {
    const WalkerSpec& spec;
    const std::function<bool(const PathFamily&)>& sink;
    std::vector<std::vector<int>> heights;  // heights of walkers already fixed
    PathFamily fam;
    bool stopped = false;

    void walker(int i)
    {
        if (i == spec.n) {
            if (!sink(fam)) stopped = true;
            return;
        }
        fam.paths[i].clear();
        std::vector<int> h{spec.a[i]};
        steps(i, h);
    }

    void steps(int i, std::vector<int>& h)
    {
        if (stopped) return;
        const int x = static_cast<int>(h.size()) - 1;
        if (x == spec.t) {
            heights.push_back(h);
            walker(i + 1);
            heights.pop_back();
            return;
        }
        for (int s : {1, -1}) {
            int v = h.back() + s;
            if (v < 0 || std::abs(v - spec.e[i]) > spec.t - x - 1) continue;
            if (i > 0 && v <= heights[i - 1][x + 1]) continue;
            h.push_back(v);
            fam.paths[i].push_back(s);
            steps(i, h);
            fam.paths[i].pop_back();
            h.pop_back();
            if (stopped) return;
        }
    }
};

}  // namespace

void enumerate_families(const WalkerSpec& spec, const std::function<bool(const PathFamily&)>& sink)
{
    spec.validate();
    if (spec.t == 0) {
        if (spec.a == spec.e) sink(PathFamily{std::vector<std::vector<int>>(spec.n)});
        return;
    }
    FamilySearch s{spec, sink, {}, PathFamily{std::vector<std::vector<int>>(spec.n)}};
    s.walker(0);
}

std::vector<PathFamily> list_families(const WalkerSpec& spec)
{
    std::vector<PathFamily> out;
    enumerate_families(spec, [&](const PathFamily& f) {
        out.push_back(f);
        return true;
    });
    return out;
}

std::string path_code(const std::vector<int>& steps)
{
    std::string s;
    for (int v : steps) s += (v > 0 ? '3' : '4');
    return s;
}

std::vector<int> parse_path_code(const std::string& code)
{
    std::vector<int> steps;
    for (char c : code) {
        if (c == '3') steps.push_back(1);
        else if (c == '4') steps.push_back(-1);
        else throw DomainError(std::string("bad step code '") + c + "'");
    }
    return steps;
}

}  // namespace watermelon
