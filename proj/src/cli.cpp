#include "kronx/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kronx/cg.hpp"
#include "kronx/fourier.hpp"
#include "kronx/io.hpp"
#include "kronx/models.hpp"
#include "kronx/verify.hpp"

namespace kronx::cli {

namespace {

using io::json;

struct Common {
    std::string output;
    std::string format = "json";
    int threads = 1;
};

struct Context {
    std::ostream& out;
    std::ostream& err;
    long max_dim = 4096;
};

// raised after a verification step fails; the message is already printed
struct VerificationFailed {};

std::string num(double x) {
    if (std::fabs(x) < 5e-13) x = 0.0;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string full(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string value_str(const Rational& q) { return q.get_str(); }
std::string value_str(const SqrtRational& s) { return s.str(); }
std::string value_str(const ComplexFloat& z) {
    return full(z.real()) + (std::signbit(z.imag()) ? "-" : "+") + full(std::fabs(z.imag())) + "j";
}

void add_common(CLI::App* sub, Common& c, bool matrix_default = true) {
    c.format = matrix_default ? "json" : "csv";
    sub->add_option("-o,--output", c.output, "Write the result to this file instead of stdout");
    sub->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}))
        ->capture_default_str();
    sub->add_option("--threads", c.threads, "Worker threads for the library kernels")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

void write_text(const Context& ctx, const Common& c, const std::string& text) {
    if (c.output.empty()) {
        ctx.out << text;
        return;
    }
    std::ofstream f(c.output);
    if (!f) throw DomainError("cannot write '" + c.output + "'");
    f << text;
    if (!f) throw DomainError("write to '" + c.output + "' failed");
}

template <class S>
void emit_matrix(const Context& ctx, const Common& c, const XSum<S>& a) {
    std::ostringstream s;
    if (c.format == "json") {
        s << io::to_json(a).dump() << '\n';
    } else if (c.format == "csv") {
        s << "row,col,value\n";
        for (const auto& [k, v] : a.terms()) s << k.first << ',' << k.second << ',' << value_str(v) << '\n';
    } else {
        s << "order " << a.order() << ", " << a.size() << " terms\n";
        for (const auto& [k, v] : a.terms()) s << "  X^{" << k.first << ',' << k.second << "}  " << value_str(v) << '\n';
    }
    write_text(ctx, c, s.str());
}

void emit_spectrum(const Context& ctx, const Common& c, const std::vector<double>& eig) {
    const auto sp = merge_spectrum(eig);
    if (c.format == "json") {
        json arr = json::array();
        for (const auto& [v, m] : sp) arr.push_back({v, m});
        write_text(ctx, c, json{{"spectrum", arr}}.dump() + "\n");
    } else if (c.format == "csv") {
        write_text(ctx, c, spectrum_csv(sp));
    } else {
        std::ostringstream s;
        for (const auto& [v, m] : sp) s << num(v) << "  (x" << m << ")\n";
        write_text(ctx, c, s.str());
    }
}

void check_dim(const Context& ctx, long dim, const std::string& what) {
    if (dim > ctx.max_dim)
        throw ResourceError(what + ": order " + std::to_string(dim) + " exceeds KRONX_MAX_DIM=" +
                            std::to_string(ctx.max_dim));
}

// product of orders, saturating once it passes the cap
long capped_product(const std::vector<long>& dims, long cap) {
    long p = 1;
    for (long d : dims) {
        if (d > 0 && p > cap / d) return cap + 1;
        p *= d;
    }
    return p;
}

Rational parse_q(const std::string& s, const char* flag) {
    try {
        return parse_rational(s);
    } catch (const Error& e) {
        throw DomainError(std::string(flag) + ": " + e.what());
    }
}

// ---- kron ------------------------------------------------------------------

struct KronArgs {
    Common c;
    std::vector<std::string> files, many;
    int power = 0;
    bool closed = false;
};

template <class S>
XSum<S> kron_fold(const std::vector<XSum<S>>& f, const KronArgs& a) {
    if (a.power > 0) return a.closed ? kron_power_closed(f.front(), a.power) : kron_power(f.front(), a.power, a.c.threads);
    return a.closed ? kron_many_closed(f) : kron_many(f, a.c.threads);
}

template <class S>
std::vector<XSum<S>> pick(const std::vector<io::AnyMatrix>& ms) {
    std::vector<XSum<S>> out;
    for (const auto& m : ms) out.push_back(std::get<XSum<S>>(m));
    return out;
}

int do_kron(const Context& ctx, const KronArgs& a) {
    std::vector<std::string> paths = a.files;
    paths.insert(paths.end(), a.many.begin(), a.many.end());
    if (a.power > 0 && paths.size() != 1) throw DomainError("kron: --power takes exactly one input matrix");
    if (a.power == 0 && paths.size() < 2) throw DomainError("kron: need at least two input matrices (or --power)");

    std::vector<io::AnyMatrix> ms;
    std::vector<long> dims;
    for (const auto& p : paths) {
        ms.push_back(io::read_matrix_file(p));
        dims.push_back(std::visit([](const auto& m) { return static_cast<long>(m.order()); }, ms.back()));
    }
    if (a.power > 0) dims.assign(static_cast<std::size_t>(a.power), dims.front());
    check_dim(ctx, capped_product(dims, ctx.max_dim), "kron");

    // widest field wins: rational < sqrt_rational < complex
    std::size_t field = 0;
    for (const auto& m : ms) field = std::max(field, m.index());
    if (field == 0) {
        emit_matrix(ctx, a.c, kron_fold(pick<Rational>(ms), a));
    } else if (field == 1) {
        std::vector<XSum<SqrtRational>> f;
        for (const auto& m : ms)
            f.push_back(m.index() == 0 ? convert<SqrtRational>(std::get<0>(m)) : std::get<1>(m));
        emit_matrix(ctx, a.c, kron_fold(f, a));
    } else {
        std::vector<XSum<ComplexFloat>> f;
        for (const auto& m : ms) f.push_back(io::as_complex(m));
        emit_matrix(ctx, a.c, kron_fold(f, a));
    }
    return ok;
}

// ---- perm ------------------------------------------------------------------

struct PermArgs {
    Common c;
    int n = 2, m = 2, p = 2, dim = 2;
    bool anti = false;
};

// ---- fft-factor --------------------------------------------------------------

int do_fft(const Context& ctx, const Common& c, int n, bool verify_flag) {
    check_dim(ctx, n, "fft-factor");
    const auto f = cooley_tukey(n);
    const double err = max_abs_diff(f.product(), fourier_matrix(n));
    bool sparse = true;
    std::ostringstream s;
    if (c.format == "json") {
        json stages = json::array();
        for (const auto& st : f.factors) stages.push_back(st.size());
        for (const auto& st : f.factors) sparse = sparse && st.size() == static_cast<std::size_t>(2 * n);
        s << json{{"n", n}, {"stage_nonzeros", stages}, {"dense_entries", static_cast<long>(n) * n},
                  {"max_error", err}}
                 .dump()
          << '\n';
    } else {
        s << "stage,nonzeros\n";
        for (std::size_t i = 0; i < f.factors.size(); ++i) {
            s << i + 1 << ',' << f.factors[i].size() << '\n';
            sparse = sparse && f.factors[i].size() == static_cast<std::size_t>(2 * n);
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "max_error,%.3e\n", err);
        s << buf;
    }
    write_text(ctx, c, s.str());
    if (verify_flag && (!sparse || err >= 1e-10)) {
        ctx.err << "fft-factor: verification failed (error " << err << (sparse ? "" : ", stage sparsity != 2n")
                << ")\n";
        throw VerificationFailed{};
    }
    return ok;
}

// ---- su2 / couple --------------------------------------------------------------

Generator parse_gen(const std::string& op) {
    if (op == "j3") return Generator::j3;
    if (op == "jplus") return Generator::plus;
    return Generator::minus;
}

// ---- cg ----------------------------------------------------------------------

std::string half(int twice) { return to_string(make_rational(twice, 2)); }

int do_cg(const Context& ctx, const Common& c, int tj1, int tj2, const std::vector<int>& coef, bool table) {
    if (tj1 < 0 || tj2 < 0) throw DomainError("cg: --twoj1 and --twoj2 must be nonnegative");
    if (!coef.empty()) {
        const auto v = cg_coefficient(tj1, coef[0], tj2, coef[1], coef[2], coef[3]);
        write_text(ctx, c, v.str() + " " + full(v.to_double()) + "\n");
        return ok;
    }
    check_dim(ctx, static_cast<long>(tj1 + 1) * (tj2 + 1), "cg");
    const auto S = build_S(tj1, tj2);
    if (!S.exact) {
        ctx.err << "cg: closed-form S failed the intertwining check for (" << tj1 << ", " << tj2 << ")\n";
        throw VerificationFailed{};
    }
    if (!table) {
        emit_matrix(ctx, c, S.entries);
        return ok;
    }
    const auto& L = S.layout;
    std::vector<std::vector<std::pair<int, SqrtRational>>> cols(static_cast<std::size_t>(L.total()) + 1);
    for (const auto& [k, v] : S.entries.terms()) cols[static_cast<std::size_t>(k.second)].emplace_back(k.first, v);
    std::ostringstream s;
    for (int k = 1; k <= L.n0; ++k)
        for (int r = 1; r <= L.d(k); ++r) {
            const int twoJ = L.block_twoJ(k), twoM = twoJ + 2 - 2 * r;
            s << "J=" << half(twoJ) << " M=" << half(twoM) << ":";
            bool first = true;
            for (const auto& [p, v] : cols[static_cast<std::size_t>(cg_col(L, k, r))]) {
                const int alpha = (p - 1) / L.n2, beta = p - alpha * L.n2;
                const int twoM1 = tj1 - 2 * alpha, twoM2 = tj2 + 2 - 2 * beta;
                std::string term = v.str();
                if (!first) s << (term[0] == '-' ? " - " : " + ");
                else s << ' ';
                if (!first && term[0] == '-') term.erase(0, 1);
                s << term << " |" << half(twoM1) << ',' << half(twoM2) << '>';
                first = false;
            }
            s << '\n';
        }
    write_text(ctx, c, s.str());
    return ok;
}

// ---- diag --------------------------------------------------------------------

struct DiagArgs {
    Common c;
    double tol = 1e-12;
    int max_sweeps = 100;
    bool single_sweep = false;
};

std::vector<double> spectrum_of(const XSum<ComplexFloat>& h, const DiagArgs& a) {
    if (!(a.tol > 0)) throw DomainError("--tol must be positive");
    const auto d = diagonalize(h, a.tol, a.max_sweeps, a.single_sweep);
    return d.eigenvalues;
}

}  // namespace

std::vector<std::pair<double, int>> merge_spectrum(std::vector<double> values, double tol) {
    std::sort(values.begin(), values.end());
    std::vector<std::pair<double, int>> out;
    std::size_t i = 0;
    while (i < values.size()) {
        std::size_t j = i;
        double sum = 0.0;
        while (j < values.size() && values[j] - values[i] <= tol) sum += values[j++];
        out.emplace_back(sum / static_cast<double>(j - i), static_cast<int>(j - i));
        i = j;
    }
    return out;
}

std::string spectrum_csv(const std::vector<std::pair<double, int>>& spectrum) {
    std::string s = "eigenvalue,multiplicity\n";
    for (const auto& [v, m] : spectrum) s += num(v) + "," + std::to_string(m) + "\n";
    return s;
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    Context ctx{out, err};

    CLI::App app{"kronx: exact Kronecker products, SU(2) coupling and small quantum models", "kronx"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    // kron
    KronArgs ka;
    auto* kron_cmd = app.add_subcommand("kron", "Kronecker product of JSON matrices (left to right)");
    kron_cmd->add_option("files", ka.files, "Input matrices")->required()->check(CLI::ExistingFile);
    kron_cmd->add_option("--many", ka.many, "Further factors appended after the positional inputs")
        ->check(CLI::ExistingFile);
    kron_cmd->add_option("--power", ka.power, "Kronecker power of the single input")->check(CLI::PositiveNumber);
    kron_cmd->add_flag("--closed", ka.closed, "Use the closed-form coefficient formula instead of the sparse path");
    add_common(kron_cmd, ka.c);

    // perm
    PermArgs pa;
    auto* perm_cmd = app.add_subcommand("perm", "Permutation matrices");
    perm_cmd->require_subcommand(1);
    auto* swap_cmd = perm_cmd->add_subcommand("swap", "Swap matrix with P(x (x) y) = y (x) x");
    swap_cmd->add_option("--n", pa.n, "Factor order")->check(CLI::PositiveNumber)->capture_default_str();
    add_common(swap_cmd, pa.c);
    auto* comm_cmd = perm_cmd->add_subcommand("commute", "Commutation matrix with P^T (A (x) B) P = B (x) A");
    comm_cmd->add_option("--n", pa.n, "Order of A")->check(CLI::PositiveNumber)->capture_default_str();
    comm_cmd->add_option("--m", pa.m, "Order of B")->check(CLI::PositiveNumber)->capture_default_str();
    add_common(comm_cmd, pa.c);
    auto* sym_cmd = perm_cmd->add_subcommand("sym", "Symmetrizer on the p-fold tensor power");
    sym_cmd->add_option("--p", pa.p, "Number of tensor factors")->check(CLI::PositiveNumber)->capture_default_str();
    sym_cmd->add_option("--dim", pa.dim, "Single-factor dimension")->check(CLI::PositiveNumber)->capture_default_str();
    sym_cmd->add_flag("--anti", pa.anti, "Antisymmetrizer instead");
    add_common(sym_cmd, pa.c);

    // fft-factor
    Common fc;
    int fft_n = 16;
    bool fft_verify = false;
    auto* fft_cmd = app.add_subcommand("fft-factor", "Cooley-Tukey factorization of the Fourier matrix");
    fft_cmd->add_option("--n", fft_n, "Order, a power of two")->check(CLI::PositiveNumber)->capture_default_str();
    fft_cmd->add_flag("--verify", fft_verify, "Exit 3 unless the product reconstructs F_n within 1e-10");
    add_common(fft_cmd, fc, false);

    // su2
    Common sc;
    int su2_twoj = 1;
    std::string su2_op = "jplus";
    auto* su2_cmd = app.add_subcommand("su2", "Generators of the spin-j irrep");
    su2_cmd->add_option("--twoj", su2_twoj, "Twice the spin")->required()->check(CLI::NonNegativeNumber);
    su2_cmd->add_option("--op", su2_op, "Generator")
        ->check(CLI::IsMember({"j3", "jplus", "jminus"}))
        ->capture_default_str();
    add_common(su2_cmd, sc);

    // couple
    Common cc;
    int c_tj1 = 1, c_tj2 = 1;
    std::string c_op = "jplus";
    bool c_block = false, c_ceiling = false;
    auto* couple_cmd = app.add_subcommand("couple", "Coupled generators J^(j1) (x) I + I (x) J^(j2)");
    couple_cmd->add_option("--twoj1", c_tj1, "Twice j1")->required()->check(CLI::NonNegativeNumber);
    couple_cmd->add_option("--twoj2", c_tj2, "Twice j2")->required()->check(CLI::NonNegativeNumber);
    couple_cmd->add_option("--op", c_op, "Generator")
        ->check(CLI::IsMember({"j3", "jplus", "jminus"}))
        ->capture_default_str();
    couple_cmd->add_flag("--block", c_block, "Block-diagonal form (direct sum over total J)");
    couple_cmd->add_flag("--ceiling", c_ceiling, "Build the product form from the ceiling-index formula");
    add_common(couple_cmd, cc);

    // cg
    Common gc;
    int g_tj1 = 1, g_tj2 = 1;
    std::vector<int> g_coef;
    bool g_matrix = false, g_table = false;
    auto* cg_cmd = app.add_subcommand("cg", "Clebsch-Gordan matrix S, single coefficients or tables");
    cg_cmd->add_option("--twoj1", g_tj1, "Twice j1")->required()->check(CLI::NonNegativeNumber);
    cg_cmd->add_option("--twoj2", g_tj2, "Twice j2")->required()->check(CLI::NonNegativeNumber);
    auto* o_matrix = cg_cmd->add_flag("--matrix", g_matrix, "Emit S as [[p, q, sign, num, den], ...] (default)");
    auto* o_coef = cg_cmd->add_option("--coef", g_coef, "<j1 m1; j2 m2 | J M> given as 2m1 2m2 2J 2M")->expected(4);
    auto* o_table = cg_cmd->add_flag("--table", g_table, "All coefficients grouped by (J, M)");
    o_matrix->excludes(o_coef)->excludes(o_table);
    o_coef->excludes(o_table);
    add_common(cg_cmd, gc);

    // diag
    DiagArgs da;
    std::string diag_file;
    auto* diag_cmd = app.add_subcommand("diag", "Spectrum of a Hermitian JSON matrix by Jacobi rotations");
    diag_cmd->add_option("file", diag_file, "Input matrix")->required()->check(CLI::ExistingFile);
    diag_cmd->add_option("--tol", da.tol, "Stop when max |offdiag| < tol")->capture_default_str();
    diag_cmd->add_option("--max-sweeps", da.max_sweeps, "Sweep limit")->check(CLI::PositiveNumber)->capture_default_str();
    diag_cmd->add_flag("--single-sweep", da.single_sweep, "One ordered pass of rotations, no convergence loop");
    add_common(diag_cmd, da.c, false);

    // heisenberg
    DiagArgs ha;
    int h_sites = 2;
    std::string h_jx = "1", h_jy = "1", h_jz = "1";
    bool h_open = false, h_printed = false, h_diag = false;
    auto* heis_cmd = app.add_subcommand("heisenberg", "Heisenberg XYZ chain -1/2 sum (Jx sx sx + Jy sy sy + Jz sz sz)");
    heis_cmd->add_option("--sites", h_sites, "Number of spins")->check(CLI::Range(2, 12))->capture_default_str();
    heis_cmd->add_option("--jx", h_jx, "Rational coupling")->capture_default_str();
    heis_cmd->add_option("--jy", h_jy, "Rational coupling")->capture_default_str();
    heis_cmd->add_option("--jz", h_jz, "Rational coupling")->capture_default_str();
    heis_cmd->add_flag("--open", h_open, "Open boundary (no bond between the last and first site)");
    heis_cmd->add_flag("--printed-two-site", h_printed,
                       "Use the two-site matrix -J/4 (X11 - X22 - X33 + X44) - 2J (X23 + X32) with J = jx = jy = jz");
    heis_cmd->add_flag("--diag", h_diag, "Print the spectrum instead of the matrix");
    heis_cmd->add_option("--tol", ha.tol, "Diagonalization tolerance")->capture_default_str();
    heis_cmd->add_flag("--single-sweep", ha.single_sweep, "One ordered pass of rotations");
    add_common(heis_cmd, ha.c);

    // hubbard
    DiagArgs ua;
    int u_sites = 2;
    std::string u_eps = "1", u_mu = "0", u_u = "0", u_t = "1";
    bool u_diag = false;
    auto* hub_cmd = app.add_subcommand("hubbard", "Hubbard chain in the local basis (0, up, down, 2)");
    hub_cmd->add_option("--sites", u_sites, "Number of sites")->check(CLI::PositiveNumber)->capture_default_str();
    hub_cmd->add_option("--eps", u_eps, "Site energy")->capture_default_str();
    hub_cmd->add_option("--mu", u_mu, "Chemical potential")->capture_default_str();
    hub_cmd->add_option("--u", u_u, "On-site repulsion")->capture_default_str();
    hub_cmd->add_option("--t", u_t, "Nearest-neighbour hopping")->capture_default_str();
    hub_cmd->add_flag("--diag", u_diag, "Print the spectrum instead of the matrix");
    hub_cmd->add_option("--tol", ua.tol, "Diagonalization tolerance")->capture_default_str();
    add_common(hub_cmd, ua.c);

    // jc
    Common jc_c;
    JCConfig j1{1.0, 16};
    double j_time = 0.0, j_gamma2 = -1.0;
    int j_cutoff2 = -1;
    bool j_two = false, j_ham = false;
    auto* jc_cmd = app.add_subcommand("jc", "Jaynes-Cummings evolution U(t) = exp(-i H t) on the truncated space");
    jc_cmd->add_option("--gamma", j1.gamma, "Coupling")->capture_default_str();
    jc_cmd->add_option("--cutoff", j1.cutoff, "Largest photon number")->check(CLI::PositiveNumber)->capture_default_str();
    jc_cmd->add_option("--time", j_time, "Evolution time")->capture_default_str();
    jc_cmd->add_flag("--two-cavity", j_two, "Two independent atom-cavity pairs, U1 (x) U2");
    jc_cmd->add_option("--gamma2", j_gamma2, "Coupling of the second pair (default: --gamma)");
    jc_cmd->add_option("--cutoff2", j_cutoff2, "Cutoff of the second pair (default: --cutoff)");
    jc_cmd->add_flag("--hamiltonian", j_ham, "Emit the interaction Hamiltonian instead of U(t)");
    add_common(jc_cmd, jc_c);

    // verify
    Common vc;
    std::string v_suite = "all";
    verify::Options vo;
    std::vector<std::string> suites = verify::suite_names();
    suites.push_back("all");
    auto* ver_cmd = app.add_subcommand("verify", "Run property suites and print residuals");
    ver_cmd->add_option("--suite", v_suite, "Suite name")->check(CLI::IsMember(suites))->capture_default_str();
    ver_cmd->add_option("--max-twoj", vo.max_twoj, "Largest twoJ for the SU(2) and CG suites")
        ->check(CLI::Range(0, 12))
        ->capture_default_str();
    ver_cmd->add_option("--tol", vo.tol, "Residual tolerance")->capture_default_str();
    ver_cmd->add_option("--seed", vo.seed, "Random seed")->capture_default_str();
    ver_cmd->add_option("--threads", vo.threads, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    ver_cmd->add_option("-o,--output", vc.output, "Write the report to this file");

    // parse
    std::vector<std::string> args(argv.size() > 1 ? argv.begin() + 1 : argv.end(), argv.end());
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        const CLI::App* target = &app;
        while (!target->get_subcommands().empty()) target = target->get_subcommands().front();
        out << target->help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ConversionError& e) {
        err << "kronx: " << e.what() << '\n';
        return validation;
    } catch (const CLI::ValidationError& e) {
        err << "kronx: " << e.what() << '\n';
        return validation;
    } catch (const CLI::ParseError& e) {
        const CLI::App* target = &app;
        while (!target->get_subcommands().empty()) target = target->get_subcommands().front();
        err << "kronx: " << e.what() << "\n\n" << target->help();
        return usage;
    }

    if (const char* env = std::getenv("KRONX_MAX_DIM")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (!*env || *end || v <= 0) {
            err << "kronx: KRONX_MAX_DIM must be a positive integer, got '" << env << "'\n";
            return validation;
        }
        ctx.max_dim = v;
    }

    try {
        if (kron_cmd->parsed()) return do_kron(ctx, ka);

        if (swap_cmd->parsed()) {
            check_dim(ctx, static_cast<long>(pa.n) * pa.n, "perm swap");
            emit_matrix(ctx, pa.c, perm_matrix<Rational>(swap_perm(pa.n)));
            return ok;
        }
        if (comm_cmd->parsed()) {
            check_dim(ctx, static_cast<long>(pa.n) * pa.m, "perm commute");
            emit_matrix(ctx, pa.c, perm_matrix<Rational>(commutation_perm(pa.n, pa.m)));
            return ok;
        }
        if (sym_cmd->parsed()) {
            const auto m = pa.anti ? antisymmetrizer(pa.p, pa.dim, ctx.max_dim) : symmetrizer(pa.p, pa.dim, ctx.max_dim);
            emit_matrix(ctx, pa.c, m);
            return ok;
        }

        if (fft_cmd->parsed()) return do_fft(ctx, fc, fft_n, fft_verify);

        if (su2_cmd->parsed()) {
            check_dim(ctx, su2_twoj + 1L, "su2");
            const Irrep rep(su2_twoj);
            if (su2_op == "j3") emit_matrix(ctx, sc, j3(rep));
            else emit_matrix(ctx, sc, generator(rep, parse_gen(su2_op)));
            return ok;
        }

        if (couple_cmd->parsed()) {
            check_dim(ctx, (c_tj1 + 1L) * (c_tj2 + 1L), "couple");
            const Generator g = parse_gen(c_op);
            if (c_block) emit_matrix(ctx, cc, block_gen(c_tj1, c_tj2, g).flat());
            else if (c_ceiling) emit_matrix(ctx, cc, product_gen_ceiling(c_tj1, c_tj2, g));
            else emit_matrix(ctx, cc, product_gen(c_tj1, c_tj2, g));
            return ok;
        }

        if (cg_cmd->parsed()) return do_cg(ctx, gc, g_tj1, g_tj2, g_coef, g_table);

        if (diag_cmd->parsed()) {
            const auto m = io::read_matrix_file(diag_file);
            const auto h = io::as_complex(m);
            check_dim(ctx, h.order(), "diag");
            emit_spectrum(ctx, da.c, spectrum_of(h, da));
            return ok;
        }

        if (heis_cmd->parsed()) {
            check_dim(ctx, 1L << h_sites, "heisenberg");
            const SpinChainParams p{h_sites, parse_q(h_jx, "--jx"), parse_q(h_jy, "--jy"), parse_q(h_jz, "--jz")};
            XSum<Rational> h;
            if (h_printed) {
                if (h_sites != 2) throw DomainError("--printed-two-site requires --sites 2");
                if (p.jx != p.jy || p.jx != p.jz) throw DomainError("--printed-two-site requires jx = jy = jz");
                h = heisenberg_two_site_printed(p.jx);
            } else {
                h = heisenberg_h(p, !h_open);
            }
            if (h_diag) {
                if (ha.c.format == "json") ha.c.format = "csv";
                emit_spectrum(ctx, ha.c, spectrum_of(to_complex(h), ha));
            } else {
                emit_matrix(ctx, ha.c, h);
            }
            return ok;
        }

        if (hub_cmd->parsed()) {
            if (u_sites > 15) throw ResourceError("hubbard: too many sites");
            check_dim(ctx, 1L << (2 * u_sites), "hubbard");
            const auto p = HubbardParams::chain(u_sites, parse_q(u_eps, "--eps"), parse_q(u_mu, "--mu"),
                                                parse_q(u_u, "--u"), parse_q(u_t, "--t"));
            const auto h = hubbard_h(p);
            if (u_diag) {
                if (ua.c.format == "json") ua.c.format = "csv";
                emit_spectrum(ctx, ua.c, spectrum_of(to_complex(h), ua));
            } else {
                emit_matrix(ctx, ua.c, h);
            }
            return ok;
        }

        if (jc_cmd->parsed()) {
            if (!std::isfinite(j1.gamma) || !std::isfinite(j_time)) throw DomainError("jc: gamma and time must be finite");
            JCConfig j2{j_gamma2 < 0 ? j1.gamma : j_gamma2, j_cutoff2 < 0 ? j1.cutoff : j_cutoff2};
            if (j2.cutoff < 1) throw DomainError("jc: --cutoff2 must be >= 1");
            if (j_two) {
                check_dim(ctx, capped_product({j1.dim(), j2.dim()}, ctx.max_dim), "jc");
                if (j_ham) {
                    const auto h = add(kron(jc_hamiltonian(j1), identity<ComplexFloat>(j2.dim())),
                                       kron(identity<ComplexFloat>(j1.dim()), jc_hamiltonian(j2)));
                    emit_matrix(ctx, jc_c, h);
                } else {
                    emit_matrix(ctx, jc_c, two_cavity_evolution(j1, j2, j_time));
                }
            } else {
                check_dim(ctx, j1.dim(), "jc");
                emit_matrix(ctx, jc_c, j_ham ? jc_hamiltonian(j1) : jc_evolution(j1, j_time));
            }
            return ok;
        }

        if (ver_cmd->parsed()) {
            if (!(vo.tol > 0)) throw DomainError("--tol must be positive");
            std::vector<std::string> run_list = v_suite == "all" ? verify::suite_names() : std::vector{v_suite};
            std::ostringstream s;
            int checks = 0, failures = 0;
            for (const auto& name : run_list) {
                const auto r = verify::run_suite(name, vo);
                for (const auto& c : r.checks) {
                    ++checks;
                    if (!c.pass) ++failures;
                    s << r.suite << ' ' << c.name << ": " << c.detail << ' ' << (c.pass ? "PASS" : "FAIL") << '\n';
                }
            }
            s << "verify: " << checks << " checks, " << failures << " failures\n";
            write_text(ctx, vc, s.str());
            return failures ? verification : ok;
        }
    } catch (const VerificationFailed&) {
        return verification;
    } catch (const ConvergenceError& e) {
        err << "kronx: " << e.what() << " (residual " << e.residual << ")\n";
        return verification;
    } catch (const Error& e) {
        err << "kronx: " << e.what() << '\n';
        return validation;
    } catch (const json::exception& e) {
        err << "kronx: " << e.what() << '\n';
        return validation;
    } catch (const std::bad_variant_access&) {
        err << "kronx: mixed matrix fields\n";
        return validation;
    }
    err << app.help();
    return usage;
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args(argv, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace kronx::cli
