#include "angle_persist/complex_io.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace angp {

using nlohmann::json;

std::string simplex_name(const Simplex& s) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << ")";
    return os.str();
}

ComplexWithMap::ComplexWithMap(std::vector<long> vertex_ids, std::map<long, Rational> turns,
                               std::vector<Simplex> simplices,
                               std::map<std::pair<long, long>, long> windings)
    : vertex_ids_(std::move(vertex_ids)), turns_(std::move(turns)), windings_(std::move(windings)) {
    std::sort(vertex_ids_.begin(), vertex_ids_.end());
    long maxdim = 0;
    for (auto& s : simplices) maxdim = std::max(maxdim, static_cast<long>(s.size()) - 1);
    by_dim_.resize(static_cast<size_t>(maxdim) + 1);
    for (long v : vertex_ids_) by_dim_[0].push_back({v});
    for (auto s : simplices) {
        if (s.size() < 2) continue;
        std::sort(s.begin(), s.end());
        by_dim_[s.size() - 1].push_back(s);
    }
    for (auto& lst : by_dim_) {
        std::sort(lst.begin(), lst.end());
        lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
    }
    index_.resize(by_dim_.size());
    for (size_t d = 0; d < by_dim_.size(); ++d)
        for (size_t i = 0; i < by_dim_[d].size(); ++i)
            index_[d].emplace(by_dim_[d][i], static_cast<long>(i));
}

const std::vector<Simplex>& ComplexWithMap::simplices(long d) const {
    static const std::vector<Simplex> empty;
    if (d < 0 || d > dim()) return empty;
    return by_dim_[static_cast<size_t>(d)];
}

const Rational& ComplexWithMap::turn(long v) const {
    auto it = turns_.find(v);
    if (it == turns_.end()) throw ValidationError("unknown vertex", std::to_string(v));
    return it->second;
}

bool ComplexWithMap::has_edge(long u, long v) const {
    Simplex e{std::min(u, v), std::max(u, v)};
    return dim() >= 1 && index_[1].count(e) > 0;
}

long ComplexWithMap::winding(long u, long v) const {
    auto key = std::make_pair(std::min(u, v), std::max(u, v));
    auto it = windings_.find(key);
    if (it == windings_.end()) throw ValidationError("missing winding", simplex_name({u, v}));
    return u < v ? it->second : -it->second;
}

Rational ComplexWithMap::delta(long u, long v) const {
    return turn(v) - turn(u) + Rational(winding(u, v));
}

std::vector<Rational> ComplexWithMap::lifted_levels(const Simplex& s) const {
    long a = anchor(s);
    std::vector<Rational> out;
    out.reserve(s.size());
    for (long v : s) out.push_back(v == a ? turn(a) : turn(a) + delta(a, v));
    return out;
}

long ComplexWithMap::simplex_index(long d, const Simplex& s) const {
    auto it = index_[static_cast<size_t>(d)].find(s);
    if (it == index_[static_cast<size_t>(d)].end())
        throw ValidationError("unknown simplex", simplex_name(s));
    return it->second;
}

void ComplexWithMap::validate() const {
    for (long v : vertex_ids_) {
        const Rational& t = turn(v);
        if (t < 0 || t >= 1) throw ValidationError("turn outside [0,1)", std::to_string(v));
    }
    // face closure
    for (long d = 1; d <= dim(); ++d)
        for (const Simplex& s : simplices(d)) {
            for (size_t drop = 0; drop < s.size(); ++drop) {
                Simplex face;
                for (size_t i = 0; i < s.size(); ++i)
                    if (i != drop) face.push_back(s[i]);
                const auto& idx = index_[face.size() - 1];
                if (idx.find(face) == idx.end())
                    throw ValidationError("face-closure violation", simplex_name(s));
            }
        }
    // every edge carries a winding
    for (const Simplex& e : simplices(1)) (void)winding(e[0], e[1]);
    // cocycle condition on 2-simplices
    for (const Simplex& s : simplices(2)) {
        if (delta(s[0], s[1]) + delta(s[1], s[2]) != delta(s[0], s[2]))
            throw ValidationError("cocycle violation", simplex_name(s));
    }
    // diameter condition: lifted levels fit in an open interval of length < 1
    for (long d = 1; d <= dim(); ++d)
        for (const Simplex& s : simplices(d)) {
            auto lv = lifted_levels(s);
            auto [mn, mx] = std::minmax_element(lv.begin(), lv.end());
            if (*mx - *mn >= 1) throw ValidationError("diameter violation", simplex_name(s));
        }
}

namespace {

Rational parse_rational(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw ValidationError("parse error: rational must be {num,den}", where);
    long num = j["num"].get<long>(), den = j["den"].get<long>();
    if (den < 1) throw ValidationError("parse error: den < 1", where);
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// unique integer w with turn(v) - turn(u) + w in (-1/2, 1/2]
long default_winding(const Rational& tu, const Rational& tv) {
    Rational d0 = tv - tu;
    return floor_long(Rational(1, 2) - d0);
}

}  // namespace

ComplexWithMap load_complex(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const std::exception& e) {
        throw ValidationError(std::string("parse error: ") + e.what(), "<input>");
    }
    if (!j.contains("vertices") || !j.contains("simplices"))
        throw ValidationError("parse error: missing vertices/simplices", "<input>");

    std::vector<long> ids;
    std::map<long, Rational> turns;
    for (auto& v : j["vertices"]) {
        long id = v.at("id").get<long>();
        if (turns.count(id)) throw ValidationError("duplicate vertex id", std::to_string(id));
        ids.push_back(id);
        turns[id] = frac_part(parse_rational(v.at("turn"), "vertex " + std::to_string(id)));
    }

    std::vector<Simplex> simplices;
    for (auto& s : j["simplices"]) {
        Simplex sx = s.get<Simplex>();
        for (long v : sx)
            if (!turns.count(v))
                throw ValidationError("unknown vertex in simplex", simplex_name(sx));
        std::sort(sx.begin(), sx.end());
        if (std::adjacent_find(sx.begin(), sx.end()) != sx.end())
            throw ValidationError("repeated vertex in simplex", simplex_name(sx));
        simplices.push_back(sx);
    }

    std::map<std::pair<long, long>, long> windings;
    if (j.contains("windings"))
        for (auto& [key, val] : j["windings"].items()) {
            auto gt = key.find('>');
            if (gt == std::string::npos)
                throw ValidationError("parse error: winding key must be \"u>v\"", key);
            long u = std::stol(key.substr(0, gt)), v = std::stol(key.substr(gt + 1));
            long w = val.get<long>();
            if (u < v)
                windings[{u, v}] = w;
            else
                windings[{v, u}] = -w;
        }

    // collect edges (anything listed plus faces of higher simplices) and
    // fill unlisted windings with the default rule
    std::vector<Simplex> all = simplices;
    for (const Simplex& s : simplices)
        if (s.size() > 2)
            for (size_t i = 0; i < s.size(); ++i)
                for (size_t k = i + 1; k < s.size(); ++k) all.push_back({s[i], s[k]});
    for (const Simplex& s : all)
        if (s.size() == 2 && !windings.count({s[0], s[1]}))
            windings[{s[0], s[1]}] = default_winding(turns[s[0]], turns[s[1]]);

    ComplexWithMap c(ids, turns, simplices, windings);
    c.validate();
    return c;
}

ComplexWithMap load_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_complex(ss.str());
}

std::string complex_to_json(const ComplexWithMap& c) {
    json j;
    j["dim"] = c.dim();
    j["vertices"] = json::array();
    for (long v : c.vertex_ids()) {
        const Rational& t = c.turn(v);
        j["vertices"].push_back({{"id", v},
                                 {"turn", {{"num", t.get_num().get_si()}, {"den", t.get_den().get_si()}}}});
    }
    j["simplices"] = json::array();
    for (long d = 1; d <= c.dim(); ++d)
        for (const Simplex& s : c.simplices(d)) j["simplices"].push_back(s);
    json w = json::object();
    for (const Simplex& e : c.simplices(1))
        w[std::to_string(e[0]) + ">" + std::to_string(e[1])] = c.winding(e[0], e[1]);
    j["windings"] = w;
    return j.dump(2);
}

CriticalTurns critical_turns(const ComplexWithMap& c) {
    std::vector<Rational> vals;
    for (long v : c.vertex_ids()) vals.push_back(c.turn(v));
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    CriticalTurns out{vals, Rational(1)};
    if (vals.size() >= 2) {
        Rational gap = vals.front() + 1 - vals.back();
        for (size_t i = 1; i < vals.size(); ++i) gap = std::min(gap, Rational(vals[i] - vals[i - 1]));
        out.min_gap = gap;
    }
    return out;
}

long cohomology_degree(const ComplexWithMap& c, const std::vector<std::pair<long, long>>& cycle) {
    // boundary must vanish: each vertex appears as head as often as as tail
    std::map<long, long> net;
    for (auto& [u, v] : cycle) {
        if (!c.has_edge(u, v)) throw ValidationError("not an edge", simplex_name({u, v}));
        net[u] -= 1;
        net[v] += 1;
    }
    for (auto& [v, n] : net)
        if (n != 0) throw ValidationError("not a cycle", std::to_string(v));
    Rational total = 0;
    for (auto& [u, v] : cycle) total += c.delta(u, v);
    if (total.get_den() != 1) throw std::logic_error("degree not integral");
    return total.get_num().get_si();
}

ComplexWithMap barycentric_subdivide(const ComplexWithMap& c) {
    // vertices of the subdivision = simplices of c; id = position in the
    // dimension-major enumeration
    std::map<Simplex, long> new_id;
    std::map<long, Rational> new_turn;       // barycenter turn (mean lifted level mod 1)
    std::vector<long> ids;
    long next = 0;
    for (long d = 0; d <= c.dim(); ++d)
        for (const Simplex& s : c.simplices(d)) {
            auto lv = c.lifted_levels(s);
            Rational mean = std::accumulate(lv.begin(), lv.end(), Rational(0)) /
                            Rational(static_cast<long>(lv.size()));
            new_id[s] = next;
            new_turn[next] = frac_part(mean);
            ids.push_back(next);
            ++next;
        }

    // mean lifted level of a face inside the lift of the carrier simplex
    auto mean_in = [&](const Simplex& carrier, const Simplex& face) {
        long a = ComplexWithMap::anchor(carrier);
        Rational acc = 0;
        for (long v : face) acc += (v == a ? c.turn(a) : c.turn(a) + c.delta(a, v));
        return acc / Rational(static_cast<long>(face.size()));
    };

    std::vector<Simplex> simplices;
    std::map<std::pair<long, long>, long> windings;
    // simplices of the subdivision = chains of strict face inclusions
    std::vector<Simplex> all;
    for (long d = 0; d <= c.dim(); ++d)
        for (const Simplex& s : c.simplices(d)) all.push_back(s);
    auto strict_face = [](const Simplex& a, const Simplex& b) {  // a < b
        return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    std::function<void(const Simplex&, std::vector<long>&)> extend =
        [&](const Simplex& top, std::vector<long>& chain) {
            chain.push_back(new_id[top]);
            if (chain.size() >= 2) {
                Simplex sx = chain;
                std::sort(sx.begin(), sx.end());
                simplices.push_back(sx);
            }
            for (const Simplex& s : all)
                if (strict_face(s, top)) extend(s, chain);
            chain.pop_back();
        };
    for (const Simplex& s : all) {
        std::vector<long> chain;
        extend(s, chain);
    }

    // windings from lifted increments computed inside the larger simplex
    for (long d = 0; d <= c.dim(); ++d)
        for (const Simplex& top : c.simplices(d))
            for (long dd = 0; dd < d; ++dd)
                for (const Simplex& face : c.simplices(dd)) {
                    if (!std::includes(top.begin(), top.end(), face.begin(), face.end())) continue;
                    long u = new_id[face], v = new_id[top];
                    Rational dl = mean_in(top, top) - mean_in(top, face);
                    Rational w = dl - (new_turn[v] - new_turn[u]);
                    if (w.get_den() != 1) throw std::logic_error("subdivision winding not integral");
                    long a = std::min(u, v), b = std::max(u, v);
                    long wab = (u < v ? 1 : -1) * w.get_num().get_si();
                    windings[{a, b}] = wab;
                }

    ComplexWithMap out(ids, new_turn, simplices, windings);
    out.validate();
    return out;
}

}  // namespace angp
