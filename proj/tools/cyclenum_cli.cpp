// cyclenum: count cyclic orders with prescribed consecutive-triple orientations.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclenum/array_io.hpp"
#include "cyclenum/bijection.hpp"
#include "cyclenum/boustrophedon.hpp"
#include "cyclenum/density.hpp"
#include "cyclenum/oracle.hpp"
#include "cyclenum/self_check.hpp"

namespace {

using namespace cyclenum;
using nlohmann::ordered_json;

constexpr int kExitUser = 1;
constexpr int kExitInternal = 2;

struct InternalFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void print_json(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

// Arguments made only of '+' and '-' ("++", "-+", "-") collide with option and
// subcommand-terminator syntax, so they are tagged before parsing.
constexpr std::string_view kSignTag = "\x01sign:";

bool is_sign_text(std::string_view arg) {
    return !arg.empty() && arg.find_first_not_of("+-") == std::string_view::npos;
}

std::string untag(std::string_view arg) {
    if (arg.starts_with(kSignTag)) arg.remove_prefix(kSignTag.size());
    return std::string(arg);
}

Sign parse_sign_arg(const std::string& text) { return parse_sign(untag(text)); }
SignWord parse_word_arg(const std::string& text) { return SignWord::parse(untag(text)); }

// ---- count ----------------------------------------------------------------

int run_count(const std::string& kind, const std::string& word_text, const std::vector<std::string>& signs) {
    const auto w = parse_word_arg(word_text);
    auto need = [&](std::size_t k) {
        if (signs.size() != k) {
            throw std::invalid_argument("count " + kind + " expects " + std::to_string(k) + " sign argument(s)");
        }
    };
    BigCount result;
    if (kind == "pw") {
        need(0);
        if (w.empty()) throw std::invalid_argument("word must be nonempty");
        result = count_P(w);
    } else if (kind == "qw") {
        need(1);
        if (w.empty()) throw std::invalid_argument("word must be nonempty");
        result = count_Q(w, parse_sign_arg(signs[0]));
    } else if (kind == "rw") {
        need(2);
        result = count_R(w, parse_sign_arg(signs[0]), parse_sign_arg(signs[1]));
    } else if (kind == "descent") {
        need(0);
        result = viennot_counts(w);
    } else {
        throw std::invalid_argument("unknown count kind '" + kind + "' (pw, qw, rw, descent)");
    }
    std::cout << result.get_str() << '\n';
    return 0;
}

// ---- table ----------------------------------------------------------------

std::vector<BigCount> sequence_table(const std::string& which, int max_n) {
    std::vector<BigCount> values;
    if (which == "euler") {
        PEvolution p(Sign::Plus);
        values.push_back(p.poly().sum());
        for (int n = 2; n <= max_n; ++n) {
            p.advance(Sign::Plus);
            values.push_back(p.poly().sum());
        }
    } else if (which == "qplus") {
        QEvolution q(Sign::Plus);
        values.push_back(q.plus().sum());
        for (int n = 2; n <= max_n; ++n) {
            q.advance(Sign::Plus);
            values.push_back(q.plus().sum());
        }
    } else if (which == "rpp") {
        values.push_back(count_R(SignWord::all_plus(1), Sign::Plus, Sign::Plus));
        if (max_n >= 2) {
            REvolution r(Sign::Plus, Sign::Plus);
            values.push_back(r.get(1).sum() + r.get(2).sum());
            for (int n = 3; n <= max_n; ++n) {
                r.advance(Sign::Plus);
                values.push_back(r.get(1).sum() + r.get(2).sum());
            }
        }
    } else {
        throw std::invalid_argument("unknown table '" + which + "' (euler, entringer, qplus, rpp)");
    }
    return values;
}

int run_table(const std::string& which, int max_n, const std::string& format) {
    if (max_n < 1) throw std::invalid_argument("--max-n must be >= 1");
    if (which == "entringer") {
        const auto lines = entringer_triangle(max_n);
        if (format == "json") {
            ordered_json j = ordered_json::array();
            for (const auto& line : lines) {
                ordered_json row = ordered_json::array();
                for (const auto& v : line) row.push_back(v.get_str());
                j.push_back(std::move(row));
            }
            print_json(j);
        } else if (format == "csv") {
            std::cout << "n,i,value\n";
            for (std::size_t n = 0; n < lines.size(); ++n) {
                for (std::size_t i = 0; i < lines[n].size(); ++i) {
                    std::cout << n + 1 << ',' << i + 1 << ',' << lines[n][i].get_str() << '\n';
                }
            }
        } else {
            for (const auto& line : lines) {
                for (std::size_t i = 0; i < line.size(); ++i) std::cout << (i ? " " : "") << line[i].get_str();
                std::cout << '\n';
            }
        }
        return 0;
    }
    const auto values = sequence_table(which, max_n);
    if (format == "json") {
        ordered_json j = ordered_json::array();
        for (std::size_t n = 0; n < values.size(); ++n) j.push_back({{"n", n + 1}, {"value", values[n].get_str()}});
        print_json(j);
    } else if (format == "csv") {
        std::cout << "n,value\n";
        for (std::size_t n = 0; n < values.size(); ++n) std::cout << n + 1 << ',' << values[n].get_str() << '\n';
    } else {
        for (std::size_t n = 0; n < values.size(); ++n) std::cout << std::setw(4) << n + 1 << "  " << values[n].get_str() << '\n';
    }
    return 0;
}

// ---- triangle / tetra -----------------------------------------------------

int run_triangle(const std::string& word_text, const std::string& eta_text, const std::string& format) {
    const auto w = parse_word_arg(word_text);
    const Sign eta = parse_sign_arg(eta_text);
    if (w.empty()) throw std::invalid_argument("word must be nonempty");
    const auto q = evolve_Q(w);
    const auto& poly = eta == Sign::Plus ? q.plus : q.minus;
    if (format == "json") {
        print_json(to_json(ArrayDump{w, eta, std::nullopt, poly}));
    } else {
        std::cout << pretty_triangle(poly);
    }
    return 0;
}

int run_tetra(const std::string& word_text, int alpha, const std::string& format) {
    const auto w = parse_word_arg(word_text);
    if (alpha < 1 || alpha > 6) throw std::invalid_argument("alpha must be in 1..6");
    const auto r = evolve_R(w);
    const auto& poly = r[static_cast<std::size_t>(alpha - 1)];
    if (format == "json") {
        print_json(to_json(ArrayDump{w, std::nullopt, alpha, poly}));
    } else {
        std::cout << pretty_tetra(poly);
    }
    return 0;
}

// ---- densities / conjecture -----------------------------------------------

int run_densities(int max_n, int digits, const std::string& format) {
    if (digits < 1) throw std::invalid_argument("--digits must be >= 1");
    const auto rows = densities(max_n);
    if (format == "json") {
        ordered_json j = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json exact = ordered_json::array(), decimal = ordered_json::array(), counts = ordered_json::array();
            for (std::size_t t = 0; t < 6; ++t) {
                counts.push_back(row.counts[t].get_str());
                exact.push_back(row.p[t].get_str());
                decimal.push_back(decimal_expansion(row.p[t], digits));
            }
            j.push_back({{"n", row.n},
                         {"total", row.total.get_str()},
                         {"counts", counts},
                         {"exact", exact},
                         {"decimal", decimal},
                         {"q_plus_density", decimal_expansion(row.q_plus_density, digits)},
                         {"r_plus_plus_density", decimal_expansion(row.r_plus_plus_density, digits)}});
        }
        print_json(j);
        return 0;
    }
    std::cout << "n,total,p1,p2,p3,p4,p5,p6,q_plus,r_plus_plus\n";
    for (const auto& row : rows) {
        std::cout << row.n << ',' << row.total.get_str();
        for (const auto& p : row.p) std::cout << ',' << decimal_expansion(p, digits);
        std::cout << ',' << decimal_expansion(row.q_plus_density, digits) << ','
                  << decimal_expansion(row.r_plus_plus_density, digits) << '\n';
    }
    return 0;
}

std::string sci(long double x) {
    std::ostringstream out;
    out << std::scientific << std::setprecision(3) << static_cast<double>(x);
    return out.str();
}

std::string fixed12(long double x) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(12) << x;
    return out.str();
}

int run_conjecture(int n) {
    const auto report = conjecture_report(n);
    static const char* names[] = {"1/pi", "1/2-1/pi", "2/pi-1/2", "2/pi-1/2", "1/2-1/pi", "1-3/pi"};
    std::cout << "n = " << n << ", #P = " << report.row.total.get_str() << '\n';
    std::cout << "class      p_n                  limit           deviation\n";
    for (std::size_t t = 0; t < 6; ++t) {
        std::cout << "R(" << t + 1 << ")       " << decimal_expansion(report.row.p[t], 18) << "  " << fixed12(report.limits[t])
                  << "  " << sci(report.deviations[t]) << "   [" << names[t] << "]\n";
    }
    std::cout << "Q+         " << decimal_expansion(report.row.q_plus_density, 18) << "  "
              << fixed12(conjectured_q_plus_limit()) << "  " << sci(report.q_plus_deviation) << "   [2/pi]\n";
    std::cout << "R(+,+)     " << decimal_expansion(report.row.r_plus_plus_density, 18) << "  "
              << fixed12(conjectured_r_plus_plus_limit()) << "  " << sci(report.r_plus_plus_deviation) << "   [1/2]\n";
    std::cout << "max deviation " << sci(report.max_deviation()) << '\n';
    return 0;
}

// ---- bijection / oracle / verify ------------------------------------------

int run_bijection_verify(int max_n) {
    if (max_n < 2 || max_n > 8) throw std::invalid_argument("bijection verify supports --max-n in 2..8");
    for (int n = 2; n <= max_n; ++n) {
        std::size_t seen = 0;
        for (const auto& z : oracle::enumerate_cyclic_orders(n + 1)) {
            const auto sigma = forward_F(z);
            if (inverse_F(sigma) != z) throw InternalFailure("inverse_F(F(Z)) != Z for Z = " + z.str());
            if (descent_pattern(sigma) != involution_i(cyclic_descent_pattern(z))) {
                throw InternalFailure("descent pattern not transported for Z = " + z.str());
            }
            ++seen;
        }
        std::cout << "n=" << n << ": " << seen << " orders on [" << n + 1 << "] round-trip, patterns transported\n";
    }
    std::cout << "PASS\n";
    return 0;
}

int run_oracle(int n, const std::string& format) {
    const auto counts = oracle::classify_all(n);
    if (format == "json") {
        ordered_json j = ordered_json::array();
        for (const auto& [w, rec] : counts.by_word) {
            ordered_json r = ordered_json::array();
            for (const auto& v : rec.r) r.push_back(v.get_str());
            j.push_back({{"word", w.str()},
                         {"p", rec.p.get_str()},
                         {"q_plus", rec.q_plus.get_str()},
                         {"q_minus", rec.q_minus.get_str()},
                         {"r", r}});
        }
        print_json(j);
        return 0;
    }
    std::cout << "word,p,q_plus,q_minus,r1,r2,r3,r4,r5,r6\n";
    for (const auto& [w, rec] : counts.by_word) {
        std::cout << w.str() << ',' << rec.p.get_str() << ',' << rec.q_plus.get_str() << ',' << rec.q_minus.get_str();
        for (const auto& v : rec.r) std::cout << ',' << v.get_str();
        std::cout << '\n';
    }
    return 0;
}

int run_verify(int max_word_len) {
    bool ok = true;
    for (const auto& check : run_self_check(max_word_len)) {
        std::cout << (check.passed ? "PASS " : "FAIL ") << check.name << " (" << check.detail << ")\n";
        ok = ok && check.passed;
    }
    std::cout << (ok ? "PASS" : "FAIL") << '\n';
    return ok ? 0 : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Enumerate total cyclic orders with prescribed consecutive-triple orientations", "cyclenum"};
    app.require_subcommand(1);
    int max_oracle_n = 0;
    app.add_option("--max-oracle-n", max_oracle_n, "Raise the brute-force ground-set guard (hard cap 12)");

    std::string count_kind, count_word;
    std::vector<std::string> count_signs;
    auto* count = app.add_subcommand("count", "Class sizes: pw <w> | qw <w> <eta> | rw <w> <eta1> <eta2> | descent <w>");
    count->add_option("kind", count_kind, "pw, qw, rw or descent")->required();
    count->add_option("word", count_word, "Sign word over + and -")->required();
    count->add_option("signs", count_signs, "eta (qw) or eta1 eta2 (rw)");

    std::string table_which, format = "pretty";
    int max_n = 10;
    auto* table = app.add_subcommand("table", "Sequence tables: euler, entringer, qplus, rpp");
    table->add_option("which", table_which)->required();
    table->add_option("--max-n", max_n, "Largest n")->capture_default_str();
    table->add_option("--format", format)->check(CLI::IsMember({"pretty", "csv", "json"}))->capture_default_str();

    std::string arr_word, arr_eta;
    int arr_alpha = 1;
    auto* triangle = app.add_subcommand("triangle", "Refined array T_w^eta");
    triangle->add_option("word", arr_word)->required();
    triangle->add_option("eta", arr_eta)->required();
    triangle->add_option("--format", format)->check(CLI::IsMember({"pretty", "json"}));
    auto* tetra = app.add_subcommand("tetra", "Refined array of R_w^(alpha)");
    tetra->add_option("word", arr_word)->required();
    tetra->add_option("alpha", arr_alpha)->required();
    tetra->add_option("--format", format)->check(CLI::IsMember({"pretty", "json"}));

    int digits = 20;
    auto* dens = app.add_subcommand("densities", "Exact densities of R^(alpha)_{+^n} in P_{+^n}");
    dens->add_option("--max-n", max_n)->required();
    dens->add_option("--digits", digits)->capture_default_str();
    std::string dens_format = "csv";
    dens->add_option("--format", dens_format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

    int conj_n = 50;
    auto* conj = app.add_subcommand("conjecture", "Compare densities at n with the conjectured limits");
    conj->add_option("--n", conj_n)->capture_default_str();

    std::string bij_action, bij_arg;
    int bij_max_n = 7;
    auto* bij = app.add_subcommand("bijection", "map <cycle> | unmap <permutation> | verify [--max-n N]");
    bij->add_option("action", bij_action)->required()->check(CLI::IsMember({"map", "unmap", "verify"}));
    bij->add_option("value", bij_arg);
    bij->add_option("--max-n", bij_max_n)->capture_default_str();

    int oracle_n = 5;
    std::string oracle_format = "csv";
    auto* orc = app.add_subcommand("oracle", "Brute-force class counts for all words on [n]");
    orc->add_option("--n", oracle_n)->required();
    orc->add_option("--format", oracle_format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

    int verify_len = 6;
    auto* verify = app.add_subcommand("verify", "Oracle, engine and bijection cross-checks");
    verify->add_option("--max-word-len", verify_len)->capture_default_str();

    std::vector<std::string> args;
    for (int t = argc - 1; t >= 1; --t) {
        std::string_view arg = argv[t];
        args.push_back(is_sign_text(arg) ? std::string(kSignTag) + std::string(arg) : std::string(arg));
    }

    try {
        app.parse(args);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUser;
    }

    try {
        if (max_oracle_n > 0) setenv("CYCLENUM_MAX_ORACLE_N", std::to_string(max_oracle_n).c_str(), 1);
        if (count->parsed()) return run_count(count_kind, count_word, count_signs);
        if (table->parsed()) return run_table(table_which, max_n, format);
        if (triangle->parsed()) return run_triangle(arr_word, arr_eta, format);
        if (tetra->parsed()) return run_tetra(arr_word, arr_alpha, format);
        if (dens->parsed()) return run_densities(max_n, digits, dens_format);
        if (conj->parsed()) return run_conjecture(conj_n);
        if (bij->parsed()) {
            if (bij_action == "verify") return run_bijection_verify(bij_max_n);
            if (bij_arg.empty()) throw std::invalid_argument("bijection " + bij_action + " needs a value");
            if (bij_action == "map") {
                std::cout << forward_F(CyclicOrder::parse(bij_arg)).str() << '\n';
            } else {
                std::cout << inverse_F(Permutation::parse(bij_arg)).str() << '\n';
            }
            return 0;
        }
        if (orc->parsed()) return run_oracle(oracle_n, oracle_format);
        if (verify->parsed()) return run_verify(verify_len);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUser;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitUser;
}
