#include "kreinccr/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "kreinccr/analytic_vectors.hpp"
#include "kreinccr/exact_oracle.hpp"
#include "kreinccr/naimark_checker.hpp"
#include "kreinccr/weyl_engine.hpp"

namespace kreinccr::cli {

using nlohmann::json;

namespace {

// Thresholds asserted by the subcommands.
namespace tol {
constexpr double kSpectrum = 1e-12;
constexpr double kJUnitarity = 1e-10;
constexpr double kGroupLaw = 1e-10;
constexpr double kWeylConverged = 1e-10;
constexpr double kWeylDecreaseFactor = 10.0;
constexpr double kNaimarkRatio = 1e-12;
constexpr double kCrossTerm = 1e-13;
constexpr double kResolvent = 1e-10;
}  // namespace tol

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonOptions {
    std::string kind = "fock";
    std::string lambda0 = "-1/2";
    std::size_t negative_window = 0;
    std::string out;
    std::string format = "csv";
    unsigned threads = 1;
    std::uint64_t seed = 0;
};

RepKind kind_of(const CommonOptions& o)
{
    return parse_rep_kind(o.kind, parse_rational(o.lambda0));
}

Generator generator_of(const std::string& name)
{
    if (name == "q") return Generator::Q;
    if (name == "p") return Generator::P;
    throw UsageError("generator must be 'q' or 'p'");
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) out.push_back(item);
    return out;
}

double parse_real(const std::string& s)
{
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw UsageError("not a real number: '" + s + "'");
    }
    if (used != s.size() || !std::isfinite(v)) throw UsageError("not a real number: '" + s + "'");
    return v;
}

// "x", "x,y,z" or "start:stop:count" (inclusive linspace).
std::vector<double> parse_real_list(const std::string& s)
{
    const auto parts = split(s, ':');
    if (parts.size() == 3) {
        const double a = parse_real(parts[0]);
        const double b = parse_real(parts[1]);
        const int count = static_cast<int>(parse_real(parts[2]));
        if (count < 1) throw UsageError("range count must be >= 1 in '" + s + "'");
        std::vector<double> out;
        for (int i = 0; i < count; ++i) out.push_back(count == 1 ? a : a + (b - a) * i / (count - 1));
        return out;
    }
    std::vector<double> out;
    for (const auto& item : split(s, ',')) out.push_back(parse_real(item));
    if (out.empty()) throw UsageError("empty list '" + s + "'");
    return out;
}

// "a:b" inclusive, zero skipped.
std::vector<int> parse_n_range(const std::string& s)
{
    const auto parts = split(s, ':');
    if (parts.size() != 2) throw UsageError("n-range must look like 'a:b'");
    const int a = static_cast<int>(parse_real(parts[0]));
    const int b = static_cast<int>(parse_real(parts[1]));
    if (a > b) throw UsageError("n-range must satisfy a <= b");
    std::vector<int> out;
    for (int n = a; n <= b; ++n) {
        if (n != 0) out.push_back(n);
    }
    if (out.empty()) throw UsageError("n-range contains only 0");
    return out;
}

// Runs task(i) for i in [0, count) on up to `threads` workers; results are
// stored by index so output order never depends on scheduling.
template <typename Result>
std::vector<Result> parallel_map(std::size_t count, unsigned threads, const std::function<Result(std::size_t)>& task)
{
    std::vector<Result> results(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                results[i] = task(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned n_workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < n_workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return results;
}

// A column value: real numbers use %.17g, everything else is preformatted.
struct Cell {
    std::variant<double, long long, std::string, bool> value;
};

using Row = std::vector<Cell>;

std::string cell_text(const Cell& c)
{
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) return format_real(v);
            else if constexpr (std::is_same_v<T, long long>) return std::to_string(v);
            else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
            else return v;
        },
        c.value);
}

json cell_json(const Cell& c)
{
    return std::visit([](const auto& v) { return json(v); }, c.value);
}

struct Report {
    std::string subcommand;
    json meta;
    std::vector<std::string> columns;
    std::vector<Row> rows;
};

json base_meta(const std::string& subcommand, const CommonOptions& o, const json& dims, const json& tolerances)
{
    json meta;
    meta["artifact"] = "kreinccr";
    meta["version"] = kVersion;
    meta["subcommand"] = subcommand;
    meta["kind"] = o.kind;
    if (o.kind == "lambda") {
        meta["lambda0"] = to_string(parse_rational(o.lambda0));
        meta["negative_window"] = o.negative_window;
    }
    meta["dims"] = dims;
    meta["seed"] = o.seed;
    meta["tolerances"] = tolerances;
    return meta;
}

std::string render(const Report& r, const std::string& format)
{
    std::ostringstream os;
    if (format == "json") {
        json doc;
        doc["meta"] = r.meta;
        doc["columns"] = r.columns;
        json rows = json::array();
        for (const auto& row : r.rows) {
            json jr = json::array();
            for (const auto& c : row) jr.push_back(cell_json(c));
            rows.push_back(std::move(jr));
        }
        doc["rows"] = std::move(rows);
        os << doc.dump(2) << '\n';
        return os.str();
    }
    for (const auto& [key, value] : r.meta.items()) os << "# " << key << ": " << value.dump() << '\n';
    for (std::size_t i = 0; i < r.columns.size(); ++i) os << (i ? "," : "") << r.columns[i];
    os << '\n';
    for (const auto& row : r.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_text(row[i]);
        os << '\n';
    }
    return os.str();
}

void emit(const std::string& text, const CommonOptions& o, std::ostream& out)
{
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw UsageError("cannot open output file '" + o.out + "'");
    f << text;
}

void add_common(CLI::App* sub, CommonOptions& o, bool with_seed)
{
    sub->add_option("--kind", o.kind, "fock | antifock | lambda")->check(CLI::IsMember({"fock", "antifock", "lambda"}));
    sub->add_option("--lambda0", o.lambda0, "lambda0 as p/q, -1 < lambda0 < 0 (lambda kind)");
    sub->add_option("--negative-window", o.negative_window, "levels below lambda0 in the window (lambda kind)");
    sub->add_option("--out", o.out, "machine-readable output file (default: standard output)");
    sub->add_option("--format", o.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--threads", o.threads, "worker threads for grid sweeps")->check(CLI::PositiveNumber);
    if (with_seed) sub->add_option("--seed", o.seed, "64-bit sampling seed");
}

// --- subcommands ---------------------------------------------------------

int cmd_build_rep(const CommonOptions& o, std::size_t dim, std::ostream& out, std::ostream& err)
{
    const Representation rep = build(kind_of(o), dim, o.negative_window);
    json doc = representation_to_json(rep);
    doc["meta"] = base_meta("build-rep", o, json::array({dim}), json::object());
    emit(doc.dump(2) + "\n", o, out);
    if (!o.out.empty()) out << "# wrote " << o.kind << " representation, dim " << dim << " to " << o.out << '\n';
    (void)err;
    return kOk;
}

int cmd_spectrum(const CommonOptions& o, std::size_t dim, std::ostream& out, std::ostream& err)
{
    const Representation rep = build(kind_of(o), dim, o.negative_window);
    const std::vector<double> spec = level_spectrum(rep);
    Report r{"spectrum", base_meta("spectrum", o, json::array({dim}), {{"spectrum_abs", tol::kSpectrum}}),
             {"index", "level", "n_eigenvalue", "signature"}, {}};
    double worst = 0.0;
    for (std::size_t i = 0; i < rep.dim(); ++i) {
        const double level = to_double(rep.levels[i]);
        worst = std::max(worst, std::fabs(spec[i] - level) / std::max(1.0, std::fabs(level)));
        r.rows.push_back({Cell{static_cast<long long>(i)}, Cell{to_string(rep.levels[i])}, Cell{spec[i]},
                          Cell{static_cast<long long>(rep.ks[i])}});
    }
    emit(render(r, o.format), o, out);
    if (worst > tol::kSpectrum) {
        err << "spectrum: N-eigenvalues deviate from the level lattice by " << format_real(worst) << '\n';
        return kCheckFailed;
    }
    return kOk;
}

struct WeylOptions {
    std::vector<std::size_t> dims;
    std::string t = "1";
    std::string s = "1";
    std::size_t mode = 0;
};

struct WeylPoint {
    std::size_t dim = 0;
    double t = 0.0;
    double s = 0.0;
    double residual = 0.0;
    double j_defect = 0.0;
    double group_defect = 0.0;
};

int cmd_weyl_sweep(const CommonOptions& o, WeylOptions w, std::ostream& out, std::ostream& err)
{
    if (w.dims.empty()) throw UsageError("--dims is required");
    std::sort(w.dims.begin(), w.dims.end());
    w.dims.erase(std::unique(w.dims.begin(), w.dims.end()), w.dims.end());
    if (w.mode >= w.dims.front()) throw UsageError("--mode must be a valid index for every dim");
    const RepKind kind = kind_of(o);
    const auto ts = parse_real_list(w.t);
    const auto ss = parse_real_list(w.s);

    struct Job {
        std::size_t dim;
        double t;
        double s;
    };
    std::vector<Job> jobs;
    for (std::size_t d : w.dims) {
        for (double t : ts) {
            for (double s : ss) jobs.push_back({d, t, s});
        }
    }
    const auto points = parallel_map<WeylPoint>(jobs.size(), o.threads, [&](std::size_t i) {
        const Job& job = jobs[i];
        const Representation rep = build(kind, job.dim, o.negative_window);
        WeylPoint p;
        p.dim = job.dim;
        p.t = job.t;
        p.s = job.s;
        p.residual = weyl::weyl_residual(rep, job.t, job.s, w.mode);
        p.j_defect = weyl::j_unitarity_defect(rep, job.t);
        p.group_defect = weyl::group_law_defect(rep, job.t, job.s);
        return p;
    });

    Report r{"weyl-sweep",
             base_meta("weyl-sweep", o, w.dims,
                       {{"j_unitarity", tol::kJUnitarity},
                        {"group_law", tol::kGroupLaw},
                        {"weyl_converged", tol::kWeylConverged},
                        {"weyl_decrease_factor", tol::kWeylDecreaseFactor}}),
             {"dim", "t", "s", "mode", "residual", "j_unitarity_defect", "group_defect"},
             {}};
    r.meta["mode"] = w.mode;
    for (const auto& p : points) {
        r.rows.push_back({Cell{static_cast<long long>(p.dim)}, Cell{p.t}, Cell{p.s},
                          Cell{static_cast<long long>(w.mode)}, Cell{p.residual}, Cell{p.j_defect},
                          Cell{p.group_defect}});
    }
    emit(render(r, o.format), o, out);

    // Lambda windows are reported, not asserted.
    if (kind.is_lambda()) return kOk;
    int status = kOk;
    for (const auto& p : points) {
        if (p.j_defect > tol::kJUnitarity || p.group_defect > tol::kGroupLaw) {
            err << "weyl-sweep: dim " << p.dim << " t " << format_real(p.t) << ": J-unitarity defect "
                << format_real(p.j_defect) << ", group-law defect " << format_real(p.group_defect) << '\n';
            status = kCheckFailed;
        }
    }
    // Residual must drop 10x per step until converged, then stay converged.
    for (double t : ts) {
        for (double s : ss) {
            std::vector<double> seq;
            for (const auto& p : points) {
                if (p.t == t && p.s == s) seq.push_back(p.residual);
            }
            for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
                const bool ok = seq[i] <= tol::kWeylConverged ? seq[i + 1] <= tol::kWeylConverged
                                                               : seq[i + 1] * tol::kWeylDecreaseFactor <= seq[i];
                if (!ok) {
                    err << "weyl-sweep: residual did not converge between dims " << w.dims[i] << " and "
                        << w.dims[i + 1] << " (t " << format_real(t) << ", s " << format_real(s) << ")\n";
                    status = kCheckFailed;
                }
            }
        }
    }
    return status;
}

struct NaimarkOptions {
    std::size_t dim = 64;
    std::string n_range = "1:10";
    int samples = 100;
    int max_m = 5;
    std::string generator = "q";
};

int cmd_naimark(const CommonOptions& o, const NaimarkOptions& nopt, std::ostream& out, std::ostream& err)
{
    if (nopt.samples < 1) throw UsageError("--samples must be >= 1");
    const Representation rep = build(kind_of(o), nopt.dim, o.negative_window);
    const Generator gen = generator_of(nopt.generator);
    const auto ns = parse_n_range(nopt.n_range);
    const auto reports = parallel_map<naimark::NaimarkReport>(ns.size(), o.threads, [&](std::size_t i) {
        return naimark::check(rep, ns[i], nopt.samples, o.seed, nopt.max_m, gen);
    });

    Report r{"naimark",
             base_meta("naimark", o, json::array({nopt.dim}),
                       {{"min_ratio", 1.0 - tol::kNaimarkRatio},
                        {"cross_term_scaled", tol::kCrossTerm},
                        {"resolvent_power", 1.0 + tol::kResolvent}}),
             {"dim", "n", "subspace", "min_ratio", "max_cross_term", "sigma_min_full"},
             {}};
    r.meta["samples"] = nopt.samples;
    r.meta["generator"] = nopt.generator;
    r.meta["max_m"] = nopt.max_m;
    double min_ratio = std::numeric_limits<double>::infinity();
    double max_cross = 0.0;
    double max_resolvent = 0.0;
    for (const auto& rep_n : reports) {
        for (int sub = 0; sub < 2; ++sub) {
            const double ratio = sub == 0 ? rep_n.min_ratio_real : rep_n.min_ratio_imag;
            const double cross = sub == 0 ? rep_n.max_cross_term_real : rep_n.max_cross_term_imag;
            r.rows.push_back({Cell{static_cast<long long>(rep_n.dim)}, Cell{static_cast<long long>(rep_n.n)},
                              Cell{std::string(sub == 0 ? "real" : "imaginary")}, Cell{ratio}, Cell{cross},
                              Cell{rep_n.full_space_sigma_min}});
        }
        min_ratio = std::min({min_ratio, rep_n.min_ratio_real, rep_n.min_ratio_imag});
        max_cross = std::max(max_cross, rep_n.max_cross_term);
        for (const auto& [m, bound] : rep_n.resolvent_power_bounds) max_resolvent = std::max(max_resolvent, bound);
    }
    emit(render(r, o.format), o, out);
    if (!o.out.empty()) {
        out << "# min ratio " << format_real(min_ratio) << ", max scaled cross term " << format_real(max_cross)
            << ", max resolvent power bound " << format_real(max_resolvent) << '\n';
    }
    int status = kOk;
    if (min_ratio < 1.0 - tol::kNaimarkRatio) {
        err << "naimark: lower bound ratio " << format_real(min_ratio) << " below 1\n";
        status = kCheckFailed;
    }
    if (max_cross > tol::kCrossTerm) {
        err << "naimark: cross term " << format_real(max_cross) << " does not vanish\n";
        status = kCheckFailed;
    }
    if (max_resolvent > 1.0 + tol::kResolvent) {
        err << "naimark: resolvent power bound " << format_real(max_resolvent) << " exceeds 1\n";
        status = kCheckFailed;
    }
    return status;
}

struct AnalyticOptions {
    std::string psi;
    std::string levels;
    double t = 1.0;
    int K = 40;
    double epsilon = 1e-10;
    std::string generator = "q";
};

analytic::LevelCoefficients parse_psi(const RepKind& kind, const AnalyticOptions& a)
{
    analytic::LevelCoefficients psi(kind);
    if (!a.psi.empty()) {
        // level=re or level=re:im
        for (const auto& item : split(a.psi, ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos) throw UsageError("--psi entries must look like level=coef");
            const auto parts = split(item.substr(eq + 1), ':');
            const double re = parse_real(parts.at(0));
            const double im = parts.size() > 1 ? parse_real(parts[1]) : 0.0;
            psi.set(parse_rational(item.substr(0, eq)), Complex(re, im));
        }
    } else if (!a.levels.empty()) {
        const auto parts = split(a.levels, ':');
        if (parts.size() != 2) throw UsageError("--levels must look like lo:hi");
        const long long lo = kind.offset_of(parse_rational(parts[0]));
        const long long hi = kind.offset_of(parse_rational(parts[1]));
        for (long long off = std::min(lo, hi); off <= std::max(lo, hi); ++off) psi.set_offset(off, 1.0);
    } else {
        psi.set(kind.anchor(), 1.0);
    }
    if (psi.empty()) throw UsageError("psi is the zero vector");
    return psi;
}

int cmd_analytic(const CommonOptions& o, const AnalyticOptions& a, std::ostream& out, std::ostream& err)
{
    const RepKind kind = kind_of(o);
    const Generator gen = generator_of(a.generator);
    const auto psi = parse_psi(kind, a);
    if (a.K < 0) throw UsageError("--K must be >= 0");
    const auto terms = analytic::series_terms(psi, a.t, a.K, gen);
    const auto bounds = parallel_map<analytic::BoundCheck>(
        terms.size(), o.threads, [&](std::size_t k) { return analytic::bound_check(psi, static_cast<int>(k), gen); });

    Report r{"analytic", base_meta("analytic", o, json::array(), {{"epsilon", a.epsilon}}),
             {"k", "term", "partial_sum", "bound_rhs", "holds"}, {}};
    r.meta["t"] = a.t;
    r.meta["K"] = a.K;
    r.meta["generator"] = a.generator;
    json support = json::object();
    for (const auto& [off, z] : psi.by_offset()) support[to_string(kind.level_at(off))] = {z.real(), z.imag()};
    r.meta["psi"] = support;

    double sum = 0.0;
    bool all_hold = true;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        sum += terms[k];
        all_hold = all_hold && bounds[k].holds;
        r.rows.push_back({Cell{static_cast<long long>(k)}, Cell{terms[k]}, Cell{sum}, Cell{bounds[k].rhs},
                          Cell{bounds[k].holds}});
    }

    int status = kOk;
    try {
        const auto cert = analytic::convergence_certificate(psi, a.t, a.epsilon, gen);
        r.meta["certificate"] = {{"K0", cert.K0}, {"tail_bound", cert.tail_bound}};
    } catch (const InconclusiveError& e) {
        r.meta["certificate"] = "inconclusive";
        err << "analytic: " << e.what() << '\n';
        status = kCheckFailed;
    }
    emit(render(r, o.format), o, out);
    if (!all_hold) {
        err << "analytic: factorial bound violated\n";
        status = kCheckFailed;
    }
    return status;
}

int cmd_oracle_check(const CommonOptions& o, int max_n, std::ostream& out, std::ostream& err)
{
    const RepKind kind = kind_of(o);
    const auto rows = exact::closed_form_audit(kind, max_n);
    Report r{"oracle-check", base_meta("oracle-check", o, json::array(), json::object()),
             {"level", "recursion", "closed_form", "match"}, {}};
    r.meta["max_n"] = max_n;
    int status = kOk;
    for (const auto& row : rows) {
        r.rows.push_back({Cell{to_string(row.level)}, Cell{to_string(row.recursion)}, Cell{to_string(row.closed_form)},
                          Cell{row.match}});
        // Neutral eigenvectors and signature-rule violations are real failures;
        // closed-form mismatches are findings.
        if (row.recursion == 0) {
            err << "oracle-check: neutral eigenvector at level " << to_string(row.level) << '\n';
            status = kCheckFailed;
        }
        if (kind.contains(row.level - 1)) {
            const int expected = (row.level < 0 ? -1 : 1) * exact::signature(kind, row.level);
            if (exact::signature(kind, row.level - 1) != expected) {
                err << "oracle-check: signature rule fails below level " << to_string(row.level) << '\n';
                status = kCheckFailed;
            }
        }
    }
    emit(render(r, o.format), o, out);
    return status;
}

// Prepends flags from a JSON config object; explicit flags win.
std::vector<std::string> merge_config(const std::vector<std::string>& args)
{
    auto it = std::find(args.begin(), args.end(), "--config");
    if (it == args.end()) return args;
    if (it + 1 == args.end()) throw UsageError("--config needs a file");
    std::ifstream f(*(it + 1));
    if (!f) throw UsageError("cannot read config file '" + *(it + 1) + "'");
    json cfg;
    try {
        cfg = json::parse(f);
    } catch (const json::exception& e) {
        throw UsageError(std::string("config file: ") + e.what());
    }
    if (!cfg.is_object()) throw UsageError("config file must hold a JSON object");

    std::vector<std::string> merged;
    for (auto a = args.begin(); a != args.end(); ++a) {
        if (a == it) {
            ++a;
            continue;
        }
        merged.push_back(*a);
    }
    for (const auto& [key, value] : cfg.items()) {
        const std::string flag = "--" + key;
        if (std::find(merged.begin(), merged.end(), flag) != merged.end()) continue;
        std::string text;
        if (value.is_string()) {
            text = value.get<std::string>();
        } else if (value.is_array()) {
            for (std::size_t i = 0; i < value.size(); ++i) {
                text += (i ? "," : "") + (value[i].is_string() ? value[i].get<std::string>() : value[i].dump());
            }
        } else {
            text = value.dump();
        }
        merged.push_back(flag);
        merged.push_back(text);
    }
    return merged;
}

}  // namespace

std::string format_real(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

json representation_to_json(const Representation& rep)
{
    json doc;
    doc["kind"] = rep.kind.name();
    if (rep.kind.is_lambda()) doc["lambda0"] = to_string(rep.kind.lambda0());
    doc["dim"] = rep.dim();
    json levels = json::array();
    for (const auto& l : rep.levels) levels.push_back(to_string(l));
    doc["levels"] = std::move(levels);
    doc["signature"] = std::vector<int>(rep.ks.signature().begin(), rep.ks.signature().end());
    json a = json::array();
    for (Eigen::Index i = 0; i < rep.a.rows(); ++i) {
        for (Eigen::Index j = 0; j < rep.a.cols(); ++j) a.push_back({rep.a(i, j).real(), rep.a(i, j).imag()});
    }
    doc["a"] = std::move(a);
    return doc;
}

Representation representation_from_json(const json& doc)
{
    try {
        const std::string kind_name = doc.at("kind").get<std::string>();
        const Rational lambda0 = doc.contains("lambda0") ? parse_rational(doc["lambda0"].get<std::string>()) : Rational(-1, 2);
        const RepKind kind = parse_rep_kind(kind_name, lambda0);
        const auto dim = doc.at("dim").get<std::size_t>();
        const auto& levels = doc.at("levels");
        if (levels.size() != dim) throw DomainError("representation JSON: levels length differs from dim");
        if (dim < 2) throw DomainError("representation JSON: dim must be >= 2");
        std::size_t window = 0;
        if (kind.is_lambda()) {
            const long long off = kind.offset_of(parse_rational(levels[0].get<std::string>()));
            if (off > 0) throw DomainError("representation JSON: lambda window must contain lambda0");
            window = static_cast<std::size_t>(-off);
        }
        Representation rep = build(kind, dim, window);
        for (std::size_t i = 0; i < dim; ++i) {
            if (parse_rational(levels[i].get<std::string>()) != rep.levels[i]) {
                throw DomainError("representation JSON: levels are not a contiguous window of the lattice");
            }
        }
        const auto sig = doc.at("signature").get<std::vector<int>>();
        if (sig.size() != dim || !std::equal(sig.begin(), sig.end(), rep.ks.signature().begin())) {
            throw DomainError("representation JSON: signature does not match the lattice");
        }
        const auto& a = doc.at("a");
        if (a.size() != dim * dim) throw DomainError("representation JSON: a must hold dim*dim entries");
        for (std::size_t k = 0; k < a.size(); ++k) {
            const Complex z(a[k].at(0).get<double>(), a[k].at(1).get<double>());
            if (z != rep.a(static_cast<Eigen::Index>(k / dim), static_cast<Eigen::Index>(k % dim))) {
                throw DomainError("representation JSON: ladder matrix differs from the construction");
            }
        }
        return rep;
    } catch (const json::exception& e) {
        throw DomainError(std::string("representation JSON: ") + e.what());
    }
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Krein-space CCR representations: construction and verification", "kreinccr"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    CommonOptions common;
    std::size_t dim = 8;
    WeylOptions weyl_opt;
    NaimarkOptions naimark_opt;
    AnalyticOptions analytic_opt;
    int max_n = 10;

    auto* build_cmd = app.add_subcommand("build-rep", "build a truncated representation and write it as JSON");
    add_common(build_cmd, common, true);
    build_cmd->add_option("--dim", dim, "window dimension")->required();

    auto* spectrum_cmd = app.add_subcommand("spectrum", "N-eigenvalues and signature per basis index");
    add_common(spectrum_cmd, common, true);
    spectrum_cmd->add_option("--dim", dim, "window dimension")->required();

    auto* weyl_cmd = app.add_subcommand("weyl-sweep", "Weyl residual, J-unitarity and group law over a grid");
    add_common(weyl_cmd, common, true);
    weyl_cmd->add_option("--dims", weyl_opt.dims, "comma-separated dims")->delimiter(',')->required();
    weyl_cmd->add_option("--t", weyl_opt.t, "t values: x | x,y | start:stop:count");
    weyl_cmd->add_option("--s", weyl_opt.s, "s values: x | x,y | start:stop:count");
    weyl_cmd->add_option("--mode", weyl_opt.mode, "basis index the residual is applied to");

    auto* naimark_cmd = app.add_subcommand("naimark", "resolvent lower bounds on the real/imaginary subspaces");
    add_common(naimark_cmd, common, true);
    naimark_cmd->add_option("--dim", naimark_opt.dim, "window dimension");
    naimark_cmd->add_option("--n-range", naimark_opt.n_range, "a:b, zero skipped");
    naimark_cmd->add_option("--samples", naimark_opt.samples, "random vectors per subspace");
    naimark_cmd->add_option("--max-m", naimark_opt.max_m, "largest resolvent power");
    naimark_cmd->add_option("--generator", naimark_opt.generator, "q | p");

    auto* analytic_cmd = app.add_subcommand("analytic", "analytic-vector series, factorial bounds, certificate");
    add_common(analytic_cmd, common, true);
    analytic_cmd->add_option("--psi", analytic_opt.psi, "level=re[:im],... (default: anchor basis vector)");
    analytic_cmd->add_option("--levels", analytic_opt.levels, "lo:hi, unit coefficients");
    analytic_cmd->add_option("--t", analytic_opt.t, "series parameter t >= 0");
    analytic_cmd->add_option("--K", analytic_opt.K, "last power");
    analytic_cmd->add_option("--epsilon", analytic_opt.epsilon, "certificate tail tolerance");
    analytic_cmd->add_option("--generator", analytic_opt.generator, "q | p");

    auto* oracle_cmd = app.add_subcommand("oracle-check", "exact recursion against the closed forms");
    add_common(oracle_cmd, common, true);
    oracle_cmd->add_option("--max-n", max_n, "largest n")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> args = merge_config(raw_args);
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        if (build_cmd->parsed()) return cmd_build_rep(common, dim, out, err);
        if (spectrum_cmd->parsed()) return cmd_spectrum(common, dim, out, err);
        if (weyl_cmd->parsed()) return cmd_weyl_sweep(common, weyl_opt, out, err);
        if (naimark_cmd->parsed()) return cmd_naimark(common, naimark_opt, out, err);
        if (analytic_cmd->parsed()) return cmd_analytic(common, analytic_opt, out, err);
        if (oracle_cmd->parsed()) return cmd_oracle_check(common, max_n, out, err);
    } catch (const ConditioningError& e) {
        err << "conditioning guard: " << e.what() << '\n';
        return kConditioningError;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace kreinccr::cli
