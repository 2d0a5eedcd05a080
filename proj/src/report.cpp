#include "osint/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "osint/errors.hpp"

namespace osint {

namespace {

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace

std::string trace_to_csv(const SimulationTrace& trace) {
    std::ostringstream out;
    out << "step,event_id,event_class,class_count,novelty,actor,action,publish_step,"
           "verified,true_info,raw_attention,alloc_attention,accurate,error,penalty,"
           "drho,rho,money\n";
    for (const TraceRow& r : trace.rows) {
        out << r.step << ',' << r.event_id << ',' << csv_field(r.event_class) << ','
            << r.class_count << ',' << fmt12(r.novelty) << ',' << csv_field(r.actor) << ','
            << strategy_name(r.action) << ',' << r.publish_step << ',' << (r.verified ? 1 : 0)
            << ',' << (r.true_info ? 1 : 0) << ',' << fmt12(r.raw_attention) << ','
            << fmt12(r.alloc_attention) << ',' << r.accurate << ',' << r.error << ','
            << fmt12(r.penalty) << ',' << fmt12(r.drho) << ',' << fmt12(r.rho) << ','
            << fmt12(r.money) << '\n';
    }
    return out.str();
}

void emit_csv(const SimulationTrace& trace, const std::string& path) {
    write_file(path, trace_to_csv(trace));
}

std::string summary_to_json(const RunSummary& summary) {
    nlohmann::json actors = nlohmann::json::array();
    for (const ActorSummary& a : summary.actors) {
        actors.push_back({{"id", a.id},
                          {"role", role_name(a.role)},
                          {"total_attention", a.total_attention},
                          {"attention_share", a.attention_share},
                          {"money", a.money},
                          {"penalty", a.penalty},
                          {"publications", a.publications},
                          {"verified_publications", a.verified_publications},
                          {"misinformation", a.misinformation},
                          {"final_rho", a.final_rho},
                          {"reward", a.reward}});
    }
    nlohmann::json doc = {{"horizon", summary.horizon},
                          {"events", summary.events},
                          {"publications", summary.publications},
                          {"verified_fraction", summary.verified_fraction},
                          {"misinformation_rate", summary.misinformation_rate},
                          {"attention_gini", summary.attention_gini},
                          {"total_attention", summary.total_attention},
                          {"actors", std::move(actors)}};
    return doc.dump(2) + "\n";
}

void emit_summary_json(const RunSummary& summary, const std::string& path) {
    write_file(path, summary_to_json(summary));
}

ExpFit fit_exponential(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw ValidationError("exponential fit: need at least two points");
    const int n = static_cast<int>(x.size());
    std::vector<double> z(x.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (!(y[i] > 0.0)) throw ValidationError("exponential fit: y values must be positive");
        z[i] = std::log(y[i]);
    }
    double mean_x = 0.0;
    double mean_z = 0.0;
    for (int i = 0; i < n; ++i) {
        mean_x += x[i];
        mean_z += z[i];
    }
    mean_x /= n;
    mean_z /= n;
    double sxx = 0.0;
    double sxz = 0.0;
    for (int i = 0; i < n; ++i) {
        sxx += (x[i] - mean_x) * (x[i] - mean_x);
        sxz += (x[i] - mean_x) * (z[i] - mean_z);
    }
    if (sxx == 0.0) throw ValidationError("exponential fit: x values are all equal");
    const double slope = sxz / sxx;

    ExpFit fit;
    fit.decay = -slope;
    fit.intercept_log = mean_z - slope * mean_x;
    fit.points = n;
    double ss_res = 0.0;
    double ss_tot = 0.0;
    for (int i = 0; i < n; ++i) {
        const double predicted = fit.intercept_log + slope * x[i];
        ss_res += (z[i] - predicted) * (z[i] - predicted);
        ss_tot += (z[i] - mean_z) * (z[i] - mean_z);
    }
    fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    return fit;
}

namespace {

// Minimal SVG scatter plotting; figures are derived artifacts, plain text and
// diffable by design.

constexpr double kWidth = 640;
constexpr double kHeight = 480;
constexpr double kLeft = 70;
constexpr double kRight = 610;
constexpr double kTop = 50;
constexpr double kBottom = 420;

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string fmt_tick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

struct Axis {
    double lo = 0.0;
    double hi = 1.0;
    double scale(double v, double pix_lo, double pix_hi) const {
        if (hi == lo) return 0.5 * (pix_lo + pix_hi);
        return pix_lo + (v - lo) / (hi - lo) * (pix_hi - pix_lo);
    }
};

class SvgPlot {
public:
    SvgPlot(const std::string& title, const std::string& x_label, const std::string& y_label,
            Axis x, Axis y)
        : x_(x), y_(y) {
        body_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
              << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight
              << "\">\n";
        body_ << "  <rect width=\"" << kWidth << "\" height=\"" << kHeight
              << "\" fill=\"white\"/>\n";
        body_ << "  <text x=\"" << (kWidth / 2) << "\" y=\"28\" text-anchor=\"middle\" "
              << "font-family=\"sans-serif\" font-size=\"16\">" << xml_escape(title)
              << "</text>\n";
        // axes
        body_ << "  <line x1=\"" << kLeft << "\" y1=\"" << kBottom << "\" x2=\"" << kRight
              << "\" y2=\"" << kBottom << "\" stroke=\"black\"/>\n";
        body_ << "  <line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft
              << "\" y2=\"" << kBottom << "\" stroke=\"black\"/>\n";
        for (int i = 0; i <= 5; ++i) {
            const double fx = x_.lo + (x_.hi - x_.lo) * i / 5.0;
            const double px = x_.scale(fx, kLeft, kRight);
            body_ << "  <line x1=\"" << px << "\" y1=\"" << kBottom << "\" x2=\"" << px
                  << "\" y2=\"" << (kBottom + 5) << "\" stroke=\"black\"/>\n";
            body_ << "  <text x=\"" << px << "\" y=\"" << (kBottom + 20)
                  << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
                  << fmt_tick(fx) << "</text>\n";
            const double fy = y_.lo + (y_.hi - y_.lo) * i / 5.0;
            const double py = y_.scale(fy, kBottom, kTop);
            body_ << "  <line x1=\"" << (kLeft - 5) << "\" y1=\"" << py << "\" x2=\"" << kLeft
                  << "\" y2=\"" << py << "\" stroke=\"black\"/>\n";
            body_ << "  <text x=\"" << (kLeft - 8) << "\" y=\"" << (py + 4)
                  << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
                  << fmt_tick(fy) << "</text>\n";
        }
        body_ << "  <text x=\"" << ((kLeft + kRight) / 2) << "\" y=\"" << (kBottom + 45)
              << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
              << xml_escape(x_label) << "</text>\n";
        body_ << "  <text x=\"18\" y=\"" << ((kTop + kBottom) / 2)
              << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
              << "transform=\"rotate(-90 18 " << ((kTop + kBottom) / 2) << ")\">"
              << xml_escape(y_label) << "</text>\n";
    }

    void circle(double vx, double vy, double r, const std::string& fill) {
        body_ << "  <circle cx=\"" << x_.scale(vx, kLeft, kRight) << "\" cy=\""
              << y_.scale(vy, kBottom, kTop) << "\" r=\"" << r << "\" fill=\"" << fill
              << "\"/>\n";
    }

    void label(double vx, double vy, const std::string& text) {
        body_ << "  <text x=\"" << (x_.scale(vx, kLeft, kRight) + 8) << "\" y=\""
              << (y_.scale(vy, kBottom, kTop) + 4)
              << "\" font-family=\"sans-serif\" font-size=\"11\">" << xml_escape(text)
              << "</text>\n";
    }

    void polyline(const std::vector<std::pair<double, double>>& pts, const std::string& stroke) {
        body_ << "  <polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"2\" "
              << "points=\"";
        for (const auto& [vx, vy] : pts)
            body_ << x_.scale(vx, kLeft, kRight) << ',' << y_.scale(vy, kBottom, kTop) << ' ';
        body_ << "\"/>\n";
    }

    void raw(const std::string& fragment) { body_ << fragment; }

    std::string finish() {
        body_ << "</svg>\n";
        return body_.str();
    }

private:
    Axis x_;
    Axis y_;
    std::ostringstream body_;
};

std::string gradient_color(double t) {
    // three-stop gradient, dark purple -> teal -> yellow
    struct Stop {
        double r, g, b;
    };
    const Stop stops[3] = {{68, 1, 84}, {33, 145, 140}, {253, 231, 37}};
    t = std::clamp(t, 0.0, 1.0);
    const double pos = t * 2.0;
    const int seg = pos < 1.0 ? 0 : 1;
    const double f = pos - seg;
    const Stop& a = stops[seg];
    const Stop& b = stops[seg + 1];
    char buf[16];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x",
                  static_cast<int>(std::lround(a.r + f * (b.r - a.r))),
                  static_cast<int>(std::lround(a.g + f * (b.g - a.g))),
                  static_cast<int>(std::lround(a.b + f * (b.b - a.b))));
    return buf;
}

}  // namespace

void emit_virality_figure(const SimulationTrace& trace, const std::string& path) {
    // Per-event attention totals, grouped by class.
    struct EventPoint {
        int class_count;
        double attention;
    };
    std::map<std::string, std::map<int, EventPoint>> by_class;  // class -> event_id -> point
    for (const TraceRow& r : trace.rows) {
        EventPoint& p = by_class[r.event_class][r.event_id];
        p.class_count = r.class_count;
        p.attention += r.alloc_attention;
    }
    const std::map<int, EventPoint>* best = nullptr;
    std::string best_class;
    for (const auto& [cls, events] : by_class) {
        if (!best || events.size() > best->size()) {
            best = &events;
            best_class = cls;
        }
    }
    if (!best || best->size() < 2)
        throw ValidationError("virality figure: need at least two events of one class");

    std::vector<double> x;
    std::vector<double> y;
    for (const auto& [id, p] : *best) {
        if (p.attention > 0.0) {
            x.push_back(p.class_count);
            y.push_back(p.attention);
        }
    }
    if (x.size() < 2)
        throw ValidationError("virality figure: need at least two events with attention");
    const ExpFit fit = fit_exponential(x, y);

    Axis ax{0.0, *std::max_element(x.begin(), x.end()) * 1.05 + 1e-9};
    const double ymax = *std::max_element(y.begin(), y.end());
    Axis ay{0.0, ymax * 1.1 + 1e-9};
    SvgPlot plot("Attention on repeated content (" + best_class + ")", "Cumulative Events",
                 "Views per Video", ax, ay);
    for (std::size_t i = 0; i < x.size(); ++i) plot.circle(x[i], y[i], 4, "steelblue");
    std::vector<std::pair<double, double>> curve;
    for (int i = 0; i <= 100; ++i) {
        const double vx = ax.lo + (ax.hi - ax.lo) * i / 100.0;
        curve.emplace_back(vx, std::exp(fit.intercept_log - fit.decay * vx));
    }
    plot.polyline(curve, "darkorange");
    {
        std::ostringstream note;
        note << "  <text x=\"" << (kRight - 8) << "\" y=\"" << (kTop + 14)
             << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">fit: "
             << fmt_tick(std::exp(fit.intercept_log)) << " * exp(-" << fmt_tick(fit.decay)
             << " x), R^2 = " << fmt_tick(fit.r_squared) << "</text>\n";
        plot.raw(note.str());
    }
    write_file(path, plot.finish());
}

void emit_heatmap_figure(const std::vector<ActorProfile>& profiles,
                         const std::map<std::string, double>& rewards,
                         const std::string& path) {
    if (profiles.empty())
        throw ValidationError("heatmap figure: need at least one actor profile");
    double lo = 0.0;
    double hi = 0.0;
    bool first = true;
    for (const ActorProfile& p : profiles) {
        auto it = rewards.find(p.id);
        const double r = it != rewards.end() ? it->second : 0.0;
        if (first || r < lo) lo = first ? r : std::min(lo, r);
        if (first || r > hi) hi = first ? r : std::max(hi, r);
        first = false;
    }

    Axis ax{0.0, 10.0};
    Axis ay{0.0, 10.0};
    SvgPlot plot("Risk-reward map of OSINT actor types",
                 "Platform Affordance (Monetization, Reach)", "Operational Risk Exposure", ax,
                 ay);
    for (const ActorProfile& p : profiles) {
        auto it = rewards.find(p.id);
        const double r = it != rewards.end() ? it->second : 0.0;
        const double t = hi > lo ? (r - lo) / (hi - lo) : 0.5;
        plot.circle(p.platform_affordance, p.risk_exposure, 6, gradient_color(t));
        plot.label(p.platform_affordance, p.risk_exposure,
                   p.id + " (" + role_name(p.role) + ")");
    }
    // colorbar
    {
        std::ostringstream bar;
        const double bx = kRight + 6;
        const int bands = 32;
        const double band_h = (kBottom - kTop) / bands;
        for (int i = 0; i < bands; ++i) {
            const double t = 1.0 - static_cast<double>(i) / (bands - 1);
            bar << "  <rect x=\"" << bx << "\" y=\"" << (kTop + i * band_h)
                << "\" width=\"10\" height=\"" << (band_h + 0.5) << "\" fill=\""
                << gradient_color(t) << "\"/>\n";
        }
        bar << "  <text x=\"" << bx << "\" y=\"" << (kTop - 6)
            << "\" font-family=\"sans-serif\" font-size=\"10\">" << fmt_tick(hi) << "</text>\n";
        bar << "  <text x=\"" << bx << "\" y=\"" << (kBottom + 12)
            << "\" font-family=\"sans-serif\" font-size=\"10\">" << fmt_tick(lo) << "</text>\n";
        plot.raw(bar.str());
    }
    write_file(path, plot.finish());
}

}  // namespace osint
