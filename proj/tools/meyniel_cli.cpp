// Command-line front end: certificates for coloring, stable sets, and the
// brute-force oracles. Exit status: 0 ok, 1 invalid certificate, 2 bad input.
#include "meyniel/app.hpp"
#include "meyniel/certify.hpp"
#include "meyniel/generate.hpp"
#include "meyniel/graph_io.hpp"
#include "meyniel/oracle.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace meyniel;

constexpr int kInvalid = 1;
constexpr int kBadInput = 2;

struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputOpts {
    std::string path;
    std::string format = "dimacs";
};

void add_input(CLI::App* cmd, InputOpts& in)
{
    cmd->add_option("--input,-i", in.path, "graph file")->required();
    cmd->add_option("--format,-f", in.format, "dimacs or edgelist")->check(CLI::IsMember({"dimacs", "edgelist"}));
}

Graph load(const InputOpts& in) { return read_graph_file(in.path, format_from_string(in.format)); }

std::vector<Vertex> parse_list(const std::string& text)
{
    std::vector<Vertex> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw BadInput("not a vertex id: '" + item + "'");
        }
    }
    return out;
}

std::string read_text(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw BadInput("cannot open " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

void write_text(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text))
        throw BadInput("cannot write " + path);
}

std::string summary(const Certificate& c)
{
    std::ostringstream out;
    std::visit(
        [&out](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, OptimalCertificate>)
                out << "OPTIMAL " << x.num_colors();
            else if constexpr (std::is_same_v<T, MeynielObstruction>)
                out << "OBSTRUCTION len=" << x.cycle.size() << " chords=" << (x.chord ? 1 : 0);
            else
                out << "NICE size=" << x.order.size();
        },
        c);
    return out.str();
}

int emit(const Graph& g, const Certificate& c, const std::string& out)
{
    if (auto v = verify(g, c); !v) {
        std::cerr << "internal error: produced certificate failed verification: " << v.reason << "\n";
        return kInvalid;
    }
    std::cout << summary(c) << "\n";
    if (!out.empty())
        write_text(out, encode(c));
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Certifying coloring and stable-set algorithms for Meyniel graphs"};
    app.require_subcommand(1);

    InputOpts in;
    std::string out;

    auto* solve = app.add_subcommand("solve", "optimal coloring + clique, or a Meyniel obstruction");
    add_input(solve, in);
    std::string order, strategy = "refined";
    solve->add_option("--order", order, "forced coloring order v0,v1,...");
    solve->add_option("--strategy", strategy, "naive or refined")->check(CLI::IsMember({"naive", "refined"}));
    solve->add_option("--out,-o", out, "certificate file");

    auto* stable = app.add_subcommand("stableset", "nice stable set containing a vertex, or an obstruction");
    add_input(stable, in);
    Vertex vertex = 0;
    stable->add_option("--vertex,-v", vertex, "anchor vertex (0-based)")->required();
    stable->add_option("--out,-o", out, "certificate file");

    auto* bystable = app.add_subcommand("colorbystable", "coloring by repeatedly removing nice stable sets");
    add_input(bystable, in);
    bystable->add_option("--out,-o", out, "certificate file");

    auto* verify_cmd = app.add_subcommand("verify", "check a certificate against a graph");
    add_input(verify_cmd, in);
    std::string cert_path;
    verify_cmd->add_option("--cert,-c", cert_path, "certificate JSON")->required();

    auto* gen = app.add_subcommand("gen", "generate a graph");
    GenSpec spec;
    std::string family;
    gen->add_option("--family", family, "gnp|chordal|bipartite|cycle|complete|edgeless|builtin")->required();
    gen->add_option("--n", spec.n, "vertex count");
    gen->add_option("--p", spec.p, "edge probability");
    gen->add_option("--name", spec.builtin, "builtin graph: p6bar or sec5");
    gen->add_option("--seed", spec.seed, "random seed");
    gen->add_option("--out,-o", out, "output file (default stdout)");
    std::string gen_format = "dimacs";
    gen->add_option("--format,-f", gen_format, "dimacs or edgelist")->check(CLI::IsMember({"dimacs", "edgelist"}));

    auto* orc = app.add_subcommand("oracle", "brute-force reference answers for small graphs");
    add_input(orc, in);
    std::string what, set;
    orc->add_option("--what", what, "chi|omega|meyniel|maxcliques|strong")
        ->required()
        ->check(CLI::IsMember({"chi", "omega", "meyniel", "maxcliques", "strong"}));
    orc->add_option("--set", set, "vertex list for --what strong");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kBadInput;
    }

    try {
        if (*solve) {
            Graph g = load(in);
            TieBreak tb = order.empty() ? TieBreak::lowest_index() : TieBreak::forced(parse_list(order));
            Strategy s = strategy == "naive" ? Strategy::naive : Strategy::refined;
            return emit(g, as_certificate(robust_solve(g, tb, s)), out);
        }
        if (*stable) {
            Graph g = load(in);
            if (vertex < 0 || vertex >= g.order())
                throw BadInput("vertex " + std::to_string(vertex) + " not in graph");
            return emit(g, as_certificate(robust_stable_set(g, vertex)), out);
        }
        if (*bystable) {
            Graph g = load(in);
            return emit(g, as_certificate(color_via_stable_sets(g)), out);
        }
        if (*verify_cmd) {
            Graph g = load(in);
            Certificate c = decode_unchecked(read_text(cert_path));
            if (auto v = verify(g, c); !v) {
                std::cout << "INVALID: " << v.reason << "\n";
                return kInvalid;
            }
            std::cout << "VALID " << summary(c) << "\n";
            return 0;
        }
        if (*gen) {
            spec.family = family_from_string(family);
            Graph g = generate(spec);
            write_text(out, gen_format == "dimacs" ? to_dimacs(g) : to_edgelist(g));
            return 0;
        }
        if (*orc) {
            Graph g = load(in);
            if (what == "chi") {
                std::cout << oracle::chromatic_bf(g) << "\n";
            } else if (what == "omega") {
                std::cout << oracle::omega_bf(g) << "\n";
            } else if (what == "meyniel") {
                if (auto ob = oracle::is_meyniel_bf(g)) {
                    std::cout << "NOT_MEYNIEL";
                    for (Vertex v : ob->cycle)
                        std::cout << ' ' << v;
                    std::cout << "\n";
                } else {
                    std::cout << "MEYNIEL\n";
                }
            } else if (what == "maxcliques") {
                for (const auto& q : oracle::maximal_cliques(g)) {
                    for (std::size_t k = 0; k < q.size(); ++k)
                        std::cout << (k ? " " : "") << q[k];
                    std::cout << "\n";
                }
            } else {
                auto s = parse_list(set);
                for (Vertex v : s)
                    if (v < 0 || v >= g.order())
                        throw BadInput("vertex " + std::to_string(v) + " not in graph");
                std::cout << (oracle::is_strong_stable_set(g, s) ? "STRONG" : "NOT_STRONG") << "\n";
            }
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << in.path << ": " << e.what() << "\n";
        return kBadInput;
    } catch (const CertificateError& e) {
        std::cerr << cert_path << ": " << e.what() << "\n";
        return kBadInput;
    } catch (const LexOrderError& e) {
        std::cerr << "--order: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::invalid_argument& e) {  // GraphError, SizeLimitError, bad tie-break, bad family
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const BadInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
    return 0;
}
