#include "pfactor/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pfactor/families.hpp"
#include "pfactor/graph_io.hpp"
#include "pfactor/harness.hpp"
#include "pfactor/parity_factor.hpp"
#include "pfactor/serialize.hpp"
#include "pfactor/spectral.hpp"

namespace pfactor::cli {
namespace {

using json = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

/// "4,1,1" or "2,[4,1,1]"; brackets are ignored.
std::vector<std::size_t> parse_counts(std::string_view text) {
    std::string flat;
    for (char c : text)
        if (c != '[' && c != ']') flat += c;
    std::vector<std::size_t> out;
    if (trim(flat).empty()) return out;
    std::stringstream in(flat);
    std::string item;
    while (std::getline(in, item, ',')) {
        const std::string_view t = trim(item);
        if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw FormatError("expected a non-negative integer, got '" + std::string(t) + "'");
        if (t.size() > 9) throw CapacityError("count '" + std::string(t) + "' is too large");
        out.push_back(static_cast<std::size_t>(std::stoul(std::string(t))));
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Graph construct_expression(std::string_view name, const std::vector<std::size_t>& args) {
    auto need = [&](std::size_t count) {
        if (args.size() != count)
            throw FormatError("'" + std::string(name) + "' takes " + std::to_string(count) + " argument(s)");
    };
    if (name == "h") {
        need(2);
        if (args[1] < 1 || args[0] < args[1] + 1) throw FormatError("h:n,a requires a >= 1 and n >= a + 1");
        check_capacity(args[0]);
        return h_extremal(args[0], args[1]);
    }
    if (name == "l") {
        need(2);
        if (args[1] < 1 || args[0] < args[1] + 4) throw FormatError("l:n,s requires s >= 1 and n >= s + 4");
        check_capacity(args[0]);
        return l_family(args[0], args[1]);
    }
    if (name == "clique_join" || name == "clique-join") {
        if (args.size() < 2) throw FormatError("clique_join:s,[n1,...] needs at least one part");
        const std::vector<std::size_t> parts(args.begin() + 1, args.end());
        if (std::find(parts.begin(), parts.end(), 0) != parts.end()) throw FormatError("clique_join parts must be positive");
        std::size_t total = args[0];
        for (std::size_t p : parts) total += p;
        check_capacity(total);
        return clique_join(args[0], parts);
    }
    if (name == "complete") {
        need(1);
        return complete(args[0]);
    }
    if (name == "empty") {
        need(1);
        return empty_graph(args[0]);
    }
    if (name == "cycle") {
        need(1);
        if (args[0] < 3) throw FormatError("cycle needs n >= 3");
        return cycle(args[0]);
    }
    if (name == "path") {
        need(1);
        return path(args[0]);
    }
    if (name == "star") {
        need(1);
        return star(args[0]);
    }
    if (name == "kst") {
        need(2);
        return complete_bipartite(args[0], args[1]);
    }
    if (name == "petersen") {
        need(0);
        return petersen();
    }
    throw FormatError("unknown graph constructor '" + std::string(name) + "'");
}

std::vector<GraphRecord> load_file_records(const std::string& path) {
    const std::string text = read_file(path);
    std::vector<GraphRecord> records;
    std::stringstream in(text);
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        GraphRecord record;
        record.line = number;
        try {
            record.graph = parse_graph6(line);
        } catch (const std::exception& e) {
            record.error = e.what();
        }
        records.push_back(std::move(record));
    }
    return records;
}

std::string dump(const json& j) { return j.dump(-1, ' ', false, json::error_handler_t::replace); }

json coefficient_json(const BigInt& c) {
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
        return static_cast<long long>(c);
    return c.str();
}

// Exit code for an exception escaping a command.
int report_error(const std::exception& e, std::ostream& err) {
    err << "pfactor: " << e.what() << '\n';
    if (dynamic_cast<const CapacityError*>(&e)) return kExitCapacity;
    return kExitUsage;
}

/// Runs `evaluate` on every record of a graph source and writes one output
/// record per graph. Evaluation failures become error records.
template <class Evaluate, class Text>
int for_each_graph(const std::string& source, const std::string& format, std::ostream& out, std::ostream& err,
                   Evaluate&& evaluate, Text&& text) {
    const bool batch = source.rfind("file:", 0) == 0;
    const std::vector<GraphRecord> records = load_graph_source(source);
    int code = kExitOk;
    for (const GraphRecord& record : records) {
        json row;
        if (batch) row["line"] = record.line;
        if (!record.graph) {
            row["error"] = record.error;
            err << "pfactor: line " << record.line << ": " << record.error << '\n';
            code = std::max(code, kExitViolation);
        } else {
            row["graph"] = write_graph6(*record.graph);
            try {
                const json fields = evaluate(*record.graph);
                for (const auto& [key, value] : fields.items()) row[key] = value;
            } catch (const std::exception& e) {
                if (!batch) throw;
                row["error"] = e.what();
                err << "pfactor: line " << record.line << ": " << e.what() << '\n';
                code = std::max(code, dynamic_cast<const CapacityError*>(&e) ? kExitCapacity : kExitViolation);
            }
        }
        if (format == "text")
            out << (row.contains("error") ? "error: " + row["error"].get<std::string>() : text(row)) << '\n';
        else
            out << dump(row) << '\n';
    }
    return code;
}

void emit_report(const json& report, const std::string& csv, const std::string& format, std::ostream& out) {
    if (format == "csv")
        out << csv;
    else
        out << report.dump(2) << '\n';
}

CLI::App* deepest_subcommand(CLI::App& app) {
    CLI::App* current = &app;
    while (!current->get_subcommands().empty()) current = current->get_subcommands().front();
    return current;
}

}  // namespace

std::vector<GraphRecord> load_graph_source(const std::string& source) {
    const std::string_view src = trim(source);
    if (src.rfind("file:", 0) == 0) return load_file_records(std::string(src.substr(5)));

    GraphRecord record;
    if (src.rfind("edges:", 0) == 0) {
        record.graph = parse_edge_list(read_file(std::string(src.substr(6))));
    } else if (src.rfind("g6:", 0) == 0) {
        record.graph = parse_graph6(src.substr(3));
    } else if (const auto colon = src.find(':'); colon != std::string_view::npos) {
        record.graph = construct_expression(src.substr(0, colon), parse_counts(src.substr(colon + 1)));
    } else if (src == "petersen") {
        record.graph = petersen();
    } else {
        record.graph = parse_graph6(src);
    }
    return {std::move(record)};
}

Graph load_single_graph(const std::string& source) {
    std::vector<GraphRecord> records = load_graph_source(source);
    if (records.size() != 1) throw FormatError("expected exactly one graph in '" + source + "'");
    if (!records.front().graph) throw FormatError(records.front().error);
    return std::move(*records.front().graph);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Parity factors, spectral radius tools and verification sweeps", "pfactor"};
    app.require_subcommand(1);
    const std::vector<std::string> formats{"text", "json", "csv"};

    // factor check
    CLI::App* factor = app.add_subcommand("factor", "Parity factor decisions")->require_subcommand(1);
    CLI::App* check = factor->add_subcommand("check", "Decide whether a graph has an (a,b)-parity factor");
    std::string graph_src;
    int a = 1;
    int b = 1;
    std::string method = "matching";
    bool want_certificate = false;
    std::string format = "json";
    check->add_option("--graph", graph_src, "Graph source")->required();
    check->add_option("-a", a, "Lower degree bound")->required();
    check->add_option("-b", b, "Upper degree bound")->required();
    check->add_option("--method", method, "Decider")->check(CLI::IsMember({"lovasz", "matching", "enum"}));
    check->add_flag("--certificate", want_certificate, "Attach a deficiency certificate to 'no' answers");
    check->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));

    // spectral
    CLI::App* spectral = app.add_subcommand("spectral", "Spectral radius tools")->require_subcommand(1);
    double tol = kDefaultTol;
    CLI::App* radius = spectral->add_subcommand("radius", "Enclosure of the spectral radius");
    CLI::App* spectrum = spectral->add_subcommand("spectrum", "All adjacency eigenvalues");
    CLI::App* charpoly = spectral->add_subcommand("charpoly", "Exact characteristic polynomial");
    for (CLI::App* sub : {radius, spectrum, charpoly}) {
        sub->add_option("--graph", graph_src, "Graph source")->required();
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
    }
    radius->add_option("--tol", tol, "Enclosure width");
    spectrum->add_option("--tol", tol, "Off-diagonal norm at which Jacobi stops");
    CLI::App* compare = spectral->add_subcommand("compare", "Order spectral radii, exactly on ties");
    std::string against_src;
    compare->add_option("--graph", graph_src, "Graph source")->required();
    compare->add_option("--against", against_src, "Reference graph source")->required();
    compare->add_option("--tol", tol, "Float enclosure width");
    compare->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));

    // construct
    CLI::App* construct = app.add_subcommand("construct", "Emit named graphs as graph6")->require_subcommand(1);
    std::size_t n = 0;
    std::size_t s = 0;
    std::size_t a_count = 1;
    std::string parts_text;
    std::string construct_format = "text";
    CLI::App* cons_h = construct->add_subcommand("h", "K_{a-1} join (K_1 union K_{n-a})");
    cons_h->add_option("--n", n, "Order")->required();
    cons_h->add_option("--a", a_count, "Parameter a")->required();
    CLI::App* cons_l = construct->add_subcommand("l", "K_s join (K_{n-s-3} union 3K_1)");
    cons_l->add_option("--n", n, "Order")->required();
    cons_l->add_option("--s", s, "Clique size")->required();
    CLI::App* cons_cj = construct->add_subcommand("clique-join", "K_s join (K_{n_1} union ... union K_{n_q})");
    cons_cj->add_option("--s", s, "Clique size")->required();
    cons_cj->add_option("--parts", parts_text, "Comma-separated part sizes")->required();
    for (CLI::App* sub : {cons_h, cons_l, cons_cj})
        sub->add_option("--format", construct_format, "Output format")->check(CLI::IsMember(formats));

    // verify
    CLI::App* verify = app.add_subcommand("verify", "Verification sweeps")->require_subcommand(1);
    CLI::App* theorem = verify->add_subcommand("theorem", "Spectral condition scan for (a,b)-parity factors");
    std::string mode_text = "exhaustive";
    ScanOptions scan;
    bool timing = false;
    std::string report_format = "json";
    theorem->add_option("-a", a, "Lower degree bound")->required();
    theorem->add_option("-b", b, "Upper degree bound")->required();
    theorem->add_option("-n", n, "Order")->required();
    theorem->add_option("--mode", mode_text, "Scan mode")->check(CLI::IsMember({"exhaustive", "sample"}));
    theorem->add_option("--seed", scan.seed, "Sample seed");
    theorem->add_option("--samples", scan.samples, "Random graphs in sample mode");
    theorem->add_option("--jobs", scan.jobs, "Worker threads")->check(CLI::Range(1, 1024));
    theorem->add_option("--chunk-size", scan.chunk_size, "Graphs per work unit")->check(CLI::PositiveNumber);
    theorem->add_flag("--timing", timing, "Include runtime_ms in the report");
    theorem->add_option("--format", report_format, "Report format")->check(CLI::IsMember({"json", "csv"}));

    CLI::App* lemma = verify->add_subcommand("lemma", "Lemma sweeps");
    std::string which;
    std::string n_text;
    std::size_t q_max = 4;
    SpectralLemmaGrid grid;
    lemma->add_option("--which", which, "Lemma")->required()->check(CLI::IsMember({"nofactor", "zhw", "spectral"}));
    lemma->add_option("-a", a, "nofactor: lower degree bound");
    lemma->add_option("-b", b, "nofactor: upper degree bound");
    lemma->add_option("-n", n_text, "nofactor: comma-separated orders; zhw: the order");
    lemma->add_option("-s", s, "zhw: clique size");
    lemma->add_option("--q-max", q_max, "zhw: largest number of parts");
    lemma->add_option("--s-min", grid.s_min, "spectral: smallest s");
    lemma->add_option("--s-max", grid.s_max, "spectral: largest s");
    lemma->add_option("--n-span", grid.n_span, "spectral: n runs over [4s+1, 4s+span]");
    lemma->add_option("--star-n-min", grid.star_n_min, "spectral: smallest n for K_1 join (K_{n-3} u 2K_1)");
    lemma->add_option("--star-n-max", grid.star_n_max, "spectral: largest n for K_1 join (K_{n-3} u 2K_1)");
    lemma->add_flag("--timing", timing, "Include runtime_ms in the report");
    lemma->add_option("--format", report_format, "Report format")->check(CLI::IsMember({"json", "csv"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << deepest_subcommand(app)->help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "pfactor: " << e.what() << "\n\n" << deepest_subcommand(app)->help();
        return kExitUsage;
    }

    try {
        if (check->parsed()) {
            const FactorSpec spec = FactorSpec::make(a, b);
            const FactorMethod m = method == "lovasz" ? FactorMethod::Lovasz
                                   : method == "enum" ? FactorMethod::Enumeration
                                                      : FactorMethod::Matching;
            auto evaluate = [&](const Graph& g) {
                FactorResult result = decide(g, spec, m);
                if (want_certificate && !result.exists && !result.certificate && g.order() <= kDefaultLovaszCap)
                    result.certificate = decide_lovasz(g, spec).certificate;
                if (!want_certificate) result.certificate.reset();
                json row = to_json(result);
                row["method"] = std::string(to_string(m));
                return row;
            };
            auto text = [](const json& row) {
                std::string line = row["graph"].get<std::string>() + " " + row["decision"].get<std::string>();
                if (row.contains("certificate"))
                    line += " eta=" + std::to_string(row["certificate"]["eta"].get<long long>());
                return line;
            };
            return for_each_graph(graph_src, format, out, err, evaluate, text);
        }
        if (radius->parsed()) {
            if (!(tol > 0)) throw std::invalid_argument("--tol must be positive");
            auto evaluate = [&](const Graph& g) {
                const SpectralEnclosure e = spectral_radius(g, tol);
                json row = to_json(e);
                row["rho"] = e.midpoint();
                return row;
            };
            auto text = [](const json& row) {
                std::ostringstream line;
                line.precision(17);
                line << row["graph"].get<std::string>() << " " << row["lo"].get<double>() << " "
                     << row["hi"].get<double>();
                return line.str();
            };
            if (format == "csv") {
                out << "graph,lo,hi,rho\n";
                int code = kExitOk;
                for (const GraphRecord& record : load_graph_source(graph_src)) {
                    if (!record.graph) {
                        err << "pfactor: line " << record.line << ": " << record.error << '\n';
                        code = kExitViolation;
                        continue;
                    }
                    const SpectralEnclosure e = spectral_radius(*record.graph, tol);
                    std::ostringstream row;
                    row.precision(17);
                    row << write_graph6(*record.graph) << ',' << e.lo << ',' << e.hi << ',' << e.midpoint() << '\n';
                    out << row.str();
                }
                return code;
            }
            return for_each_graph(graph_src, format, out, err, evaluate, text);
        }
        if (spectrum->parsed()) {
            if (!(tol > 0)) throw std::invalid_argument("--tol must be positive");
            auto evaluate = [&](const Graph& g) {
                const Spectrum sp = full_spectrum(g, tol);
                return json{{"eigenvalues", sp.values}, {"sweeps", sp.sweeps}};
            };
            auto text = [](const json& row) {
                std::ostringstream line;
                line.precision(12);
                line << row["graph"].get<std::string>();
                for (const auto& v : row["eigenvalues"]) line << ' ' << v.get<double>();
                return line.str();
            };
            return for_each_graph(graph_src, format, out, err, evaluate, text);
        }
        if (charpoly->parsed()) {
            auto evaluate = [](const Graph& g) {
                const IntPolynomial p = char_poly_exact(g);
                json coeffs = json::array();
                for (const BigInt& c : p.coefficients()) coeffs.push_back(coefficient_json(c));
                return json{{"polynomial", p.to_string()}, {"coefficients", coeffs}};
            };
            auto text = [](const json& row) {
                return row["graph"].get<std::string>() + " " + row["polynomial"].get<std::string>();
            };
            return for_each_graph(graph_src, format, out, err, evaluate, text);
        }
        if (compare->parsed()) {
            if (!(tol > 0)) throw std::invalid_argument("--tol must be positive");
            const Graph reference = load_single_graph(against_src);
            if (reference.order() == 0) throw std::invalid_argument("reference graph is empty");
            const RadiusReference ref(reference, tol);
            auto evaluate = [&](const Graph& g) {
                if (g.order() == 0) throw std::invalid_argument("graph is empty");
                const RadiusComparison c = ref.compare(g);
                return json{{"against", write_graph6(reference)},
                            {"order", std::string(to_string(c.order))},
                            {"method", std::string(to_string(c.method))}};
            };
            auto text = [](const json& row) {
                return row["graph"].get<std::string>() + " " + row["order"].get<std::string>() + " " +
                       row["against"].get<std::string>() + " (" + row["method"].get<std::string>() + ")";
            };
            return for_each_graph(graph_src, format, out, err, evaluate, text);
        }
        if (construct->parsed()) {
            Graph g;
            json params;
            if (cons_h->parsed()) {
                if (a_count < 1 || n < a_count + 1) throw std::invalid_argument("construct h requires a >= 1 and n >= a + 1");
                check_capacity(n);
                g = h_extremal(n, a_count);
                params = {{"family", "h"}, {"n", n}, {"a", a_count}};
            } else if (cons_l->parsed()) {
                if (s < 1 || n < s + 4) throw std::invalid_argument("construct l requires s >= 1 and n >= s + 4");
                check_capacity(n);
                g = l_family(n, s);
                params = {{"family", "l"}, {"n", n}, {"s", s}};
            } else {
                std::vector<std::size_t> counts{s};
                for (std::size_t p : parse_counts(parts_text)) counts.push_back(p);
                g = construct_expression("clique_join", counts);
                params = {{"family", "clique-join"}, {"s", s}, {"parts", std::vector<std::size_t>(counts.begin() + 1, counts.end())}};
            }
            const std::string g6 = write_graph6(g);
            if (construct_format == "json") {
                json row = params;
                row["graph6"] = g6;
                out << dump(row) << '\n';
            } else if (construct_format == "csv") {
                out << "graph6\n" << g6 << '\n';
            } else {
                out << g6 << '\n';
            }
            return kExitOk;
        }
        if (theorem->parsed()) {
            scan.mode = parse_scan_mode(mode_text);
            const ScanReport report = verify_main_theorem(a, b, n, scan);
            for (const std::string& note : report.notes) err << "pfactor: note: " << note << '\n';
            emit_report(report.to_json(timing), report.to_csv(), report_format, out);
            return report.confirmed() ? kExitOk : kExitViolation;
        }
        if (lemma->parsed()) {
            LemmaReport report;
            if (which == "nofactor") {
                const std::vector<std::size_t> orders = parse_counts(n_text);
                if (orders.empty()) throw std::invalid_argument("--which nofactor needs -n with at least one order");
                for (std::size_t order : orders) check_capacity(order);
                report = verify_lemma_no_factor(a, b, orders);
            } else if (which == "zhw") {
                const std::vector<std::size_t> orders = parse_counts(n_text);
                if (orders.size() != 1) throw std::invalid_argument("--which zhw needs a single -n");
                report = verify_zhw(s, orders.front(), q_max);
            } else {
                report = verify_spectral_lemmas(grid);
            }
            emit_report(report.to_json(timing), report.to_csv(), report_format, out);
            return report.passed() ? kExitOk : kExitViolation;
        }
    } catch (const std::exception& e) {
        return report_error(e, err);
    }
    err << app.help();
    return kExitUsage;
}

}  // namespace pfactor::cli
