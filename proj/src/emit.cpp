#include "angle_persist/emit.hpp"

#include <json.hpp>

#include <cmath>
#include <iomanip>
#include <sstream>

namespace angp {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

json rational_json(const Rational& x) {
    Rational c(x);
    c.canonicalize();
    return json{{"den", c.get_den().get_str()}, {"num", c.get_num().get_str()}};
}

Rational rational_from(const json& j) {
    return Rational(mpz_class(j.at("num").get<std::string>()),
                    mpz_class(j.at("den").get<std::string>()));
}

json point_json(const SupportPoint& p) {
    auto z = p.z();
    return json{{"a", rational_json(p.a)},
                {"b", rational_json(p.b)},
                {"im_z", z.imag()},
                {"multiplicity", p.multiplicity},
                {"re_z", z.real()}};
}

json config_json(const Configuration& c) {
    json points = json::array();
    for (const auto& p : c.points) points.push_back(point_json(p));
    return json{{"betti", c.betti},
                {"certificate_total", c.total_multiplicity()},
                {"field", c.field.name()},
                {"points", points},
                {"r", c.r},
                {"window_radius", c.window_radius}};
}

}  // namespace

std::string configuration_json(const std::vector<Configuration>& cfgs) {
    json out = json::array();
    for (const auto& c : cfgs) out.push_back(config_json(c));
    return json{{"configurations", out}}.dump(2) + "\n";
}

std::string configuration_csv(const std::vector<Configuration>& cfgs) {
    std::ostringstream os;
    os << "r,a_num,a_den,b_num,b_den,mult,re_z,im_z\n";
    os << std::setprecision(17);
    for (const auto& c : cfgs)
        for (const auto& p : c.points) {
            Rational a(p.a), b(p.b);
            a.canonicalize();
            b.canonicalize();
            auto z = p.z();
            os << c.r << ',' << a.get_num().get_str() << ',' << a.get_den().get_str() << ','
               << b.get_num().get_str() << ',' << b.get_den().get_str() << ',' << p.multiplicity
               << ',' << z.real() << ',' << z.imag() << '\n';
        }
    return os.str();
}

std::string configuration_svg(const std::vector<Configuration>& cfgs) {
    const double size = 480.0, cx = size / 2, cy = size / 2;
    // log-polar: unit circle at radius R0, one turn of b-a per ring step
    const double r0 = 120.0, ring = 60.0;
    std::ostringstream os;
    os << std::setprecision(6);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
       << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
    os << "  <rect width=\"" << size << "\" height=\"" << size << "\" fill=\"white\"/>\n";
    os << "  <line x1=\"0\" y1=\"" << cy << "\" x2=\"" << size << "\" y2=\"" << cy
       << "\" stroke=\"#ccc\"/>\n";
    os << "  <line x1=\"" << cx << "\" y1=\"0\" x2=\"" << cx << "\" y2=\"" << size
       << "\" stroke=\"#ccc\"/>\n";
    os << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << r0
       << "\" fill=\"none\" stroke=\"#444\" stroke-dasharray=\"4 3\"/>\n";
    const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b"};
    for (size_t ci = 0; ci < cfgs.size(); ++ci) {
        const char* col = colors[ci % 5];
        for (const auto& p : cfgs[ci].points) {
            double a = p.a.get_d();
            double beta = Rational(p.b - p.a).get_d();
            double rad = r0 + ring * beta;
            if (rad < 4.0) rad = 4.0;
            double x = cx + rad * std::cos(2 * M_PI * a);
            double y = cy - rad * std::sin(2 * M_PI * a);
            double marker = 4.0 + 2.0 * std::sqrt(static_cast<double>(p.multiplicity));
            os << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << marker
               << "\" fill=\"" << col << "\" fill-opacity=\"0.7\">"
               << "<title>r=" << cfgs[ci].r << " mult=" << p.multiplicity << "</title></circle>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

std::string betti_json(const std::vector<NovikovInvariants>& invs, const FieldDesc& f) {
    json out = json::array();
    for (const auto& inv : invs) {
        json factors = json::array();
        for (const auto& d : inv.invariant_factors) factors.push_back(d.str());
        out.push_back(json{{"betti", inv.free_rank},
                           {"invariant_factors", factors},
                           {"r", inv.r},
                           {"torsion_dim", inv.torsion_dim}});
    }
    return json{{"degrees", out}, {"field", f.name()}}.dump(2) + "\n";
}

std::string poly_json(const std::vector<Configuration>& cfgs) {
    json out = json::array();
    for (const auto& c : cfgs) {
        auto coeffs = char_poly(c);
        json cj = json::array();
        for (const auto& z : coeffs) cj.push_back(json::array({z.real(), z.imag()}));
        out.push_back(json{{"coefficients_ascending", cj}, {"degree", c.betti}, {"r", c.r}});
    }
    return json{{"polynomials", out}}.dump(2) + "\n";
}

std::string modules_json(const std::vector<ModuleRefinement>& refs) {
    json out = json::array();
    for (const auto& m : refs) {
        json entries = json::array();
        for (const auto& e : m.entries) {
            json lcols = json::array(), lpcols = json::array();
            for (long j = 0; j < e.L.cols(); ++j) {
                json col = json::array();
                for (long i = 0; i < e.L.rows(); ++i) col.push_back(e.L.at(i, j).str());
                lcols.push_back(col);
            }
            for (long j = 0; j < e.Lprime.cols(); ++j) {
                json col = json::array();
                for (long i = 0; i < e.Lprime.rows(); ++i) col.push_back(e.Lprime.at(i, j).str());
                lpcols.push_back(col);
            }
            entries.push_back(json{{"a", rational_json(e.point.a)},
                                   {"b", rational_json(e.point.b)},
                                   {"generators", lcols},
                                   {"multiplicity", e.point.multiplicity},
                                   {"quotient_rank", e.quotient_rank},
                                   {"sub_generators", lpcols}});
        }
        out.push_back(json{{"beta", m.beta},
                           {"direct_sum_certified", m.direct_sum_certified},
                           {"entries", entries},
                           {"field", m.field.name()},
                           {"r", m.r},
                           {"split_certified", m.split_certified}});
    }
    return json{{"refinements", out}}.dump(2) + "\n";
}

std::string oracle_json(const std::vector<OracleReport>& reps) {
    json out = json::array();
    for (const auto& rep : reps) {
        json supports = json::array();
        for (const auto& sup : rep.supports) {
            json pts = json::array();
            for (const auto& [ab, m] : sup)
                pts.push_back(json{{"a", rational_json(ab.first)},
                                   {"b", rational_json(ab.second)},
                                   {"multiplicity", m}});
            supports.push_back(pts);
        }
        json stable = json::array();
        for (const auto& [ab, m] : rep.stable_support)
            stable.push_back(json{{"a", rational_json(ab.first)},
                                  {"b", rational_json(ab.second)},
                                  {"multiplicity", m}});
        out.push_back(json{{"dims", rep.dims},
                           {"quantity", rep.quantity},
                           {"slope", rep.slope},
                           {"stabilized", rep.stabilized},
                           {"stable_support", stable},
                           {"supports", supports},
                           {"window_sizes", rep.window_sizes}});
    }
    return json{{"reports", out}}.dump(2) + "\n";
}

std::map<std::pair<Rational, Rational>, long> support_from_json(const std::string& text, long r) {
    json j = json::parse(text);
    std::map<std::pair<Rational, Rational>, long> out;
    for (const auto& cfg : j.at("configurations")) {
        if (cfg.at("r").get<long>() != r) continue;
        for (const auto& p : cfg.at("points"))
            out[{rational_from(p.at("a")), rational_from(p.at("b"))}] =
                p.at("multiplicity").get<long>();
    }
    return out;
}

}  // namespace angp
