#include "heomq/scenario.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

namespace heomq {

Matrix4 bell_initial_state() {
    Eigen::Vector4cd psi;
    psi << 0.0, -1.0, 1.0, 0.0;
    return DensityMatrix::from_pure(psi).matrix();
}

SystemModel make_system(const RunConfig& cfg) { return build_system(cfg.epsilon, cfg.J); }

bath::DrudeParams make_drude(const RunConfig& cfg) { return {cfg.lambda, cfg.gamma, cfg.beta}; }

namespace {

// lambda = 0 is a valid run (bath switched off) but not a valid Drude bath, so
// the expansion is built at unit lambda and rescaled: every coefficient is linear in lambda.
bath::BathExpansion make_expansion(const RunConfig& cfg) {
    if (cfg.lambda > 0.0)
        return bath::build_expansion(make_drude(cfg), cfg.M);
    auto e = bath::build_expansion({1.0, cfg.gamma, cfg.beta}, cfg.M);
    e.params.lambda = 0.0;
    for (auto& c : e.c)
        c = 0.0;
    e.delta = 0.0;
    e.delta_imag = 0.0;
    return e;
}

} // namespace

heom::HeomOperator make_operator(const RunConfig& cfg) {
    auto idx = std::make_shared<const HierarchyIndexSet>(cfg.M, cfg.L);
    return heom::HeomOperator(make_system(cfg), make_expansion(cfg), std::move(idx));
}

HierarchyState prepare_equilibrium(const heom::HeomOperator& op, const RunConfig& cfg) {
    return heom::equilibrate_from_gibbs(op, {.t_eq = cfg.tEq, .stationarity_tol = cfg.stationarityTol, .dt = cfg.dt});
}

Trajectory run_pulsed(const heom::HeomOperator& op, const HierarchyState& equilibrium, bool factorized,
                      const RunConfig& cfg) {
    HierarchyState s = factorized ? heom::factorize(equilibrium) : equilibrium;
    s = heom::apply_pulse(std::move(s), 1);
    s.t = 0.0;
    return heom::propagate(s, op, {.dt = cfg.dt, .t_end = cfg.tEnd, .sample_stride = cfg.sampleStride});
}

Trajectory run_fig1(const heom::HeomOperator& op, const RunConfig& cfg) {
    HierarchyState s(op.indices_ptr(), bell_initial_state(), 0.0);
    return heom::propagate(s, op, {.dt = cfg.dt, .t_end = cfg.tEnd, .sample_stride = cfg.sampleStride});
}

double equilibrium_concurrence(const Trajectory& traj) {
    if (traj.empty())
        return 0.0;
    const std::size_t n = traj.size();
    const std::size_t tail = std::max<std::size_t>(1, n / 10);
    double sum = 0.0;
    for (std::size_t i = n - tail; i < n; ++i)
        sum += traj.samples[i].C;
    return sum / static_cast<double>(tail);
}

ScenarioResult run_scenario(const RunConfig& cfg) {
    cfg.validate();
    ScenarioResult res;
    res.scenario = cfg.scenario;

    const SystemModel sys = make_system(cfg);
    res.gibbs_concurrence = concurrence(gibbs_state(sys.hs, cfg.beta), {.pos_tol = 1e-10, .tol = 1e-10});
    res.gibbs_concurrence_exchange = gibbs_concurrence_closed_form(cfg.epsilon, cfg.J, cfg.beta);

    switch (cfg.scenario) {
    case Scenario::fig1:
        res.trajectory = run_fig1(make_operator(cfg), cfg);
        break;
    case Scenario::fig2_correlated:
    case Scenario::fig2_factorized: {
        const auto op = make_operator(cfg);
        const HierarchyState eq = prepare_equilibrium(op, cfg);
        res.pre_pulse_rho = eq.rho();
        res.trajectory = run_pulsed(op, eq, cfg.scenario == Scenario::fig2_factorized, cfg);
        break;
    }
    case Scenario::redfield_fig1: {
        const auto gen = redfield::build_redfield(sys, make_drude(cfg));
        res.trajectory = redfield::propagate_redfield(gen, bell_initial_state(), cfg.dt, cfg.tEnd, cfg.sampleStride);
        break;
    }
    case Scenario::redfield_fig2: {
        // Same reduced initial state as the HEOM runs: the pulsed hierarchy equilibrium.
        const auto op = make_operator(cfg);
        const HierarchyState eq = prepare_equilibrium(op, cfg);
        res.pre_pulse_rho = eq.rho();
        const Matrix4 rho0 = heom::apply_pulse(heom::factorize(eq), 1).rho();
        const auto gen = redfield::build_redfield(sys, make_drude(cfg));
        res.trajectory = redfield::propagate_redfield(gen, rho0, cfg.dt, cfg.tEnd, cfg.sampleStride);
        break;
    }
    case Scenario::toymodel: {
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                for (int k = 0; k < 5; ++k) {
                    const toy::ToyParams p{0.5 + 1.5 * i / 4.0, 1.0 * j / 4.0, 0.5 + 3.5 * k / 4.0};
                    res.toy_table.push_back({p, toy::system_bath_coherence(p)});
                }
        return res;
    }
    case Scenario::convergence_sweep: {
        res.trajectory = run_fig1(make_operator(cfg), cfg);
        RunConfig deeper = cfg;
        deeper.L += 2;
        RunConfig wider = cfg;
        wider.M += 1;
        res.convergence = ConvergenceDeltas{
            concurrence_sup_diff(res.trajectory, run_fig1(make_operator(deeper), deeper)),
            concurrence_sup_diff(res.trajectory, run_fig1(make_operator(wider), wider)),
        };
        break;
    }
    }
    res.report = detect_death_revival(res.trajectory, cfg.zeroTol);
    return res;
}

std::string csv_header() {
    std::ostringstream h;
    h << "t,C,eof";
    for (const char* part : {"re", "im"})
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                h << ',' << part << "_rho_" << r << c;
    h << ",trace_error,min_eig";
    return h.str();
}

void write_csv(std::ostream& out, const Trajectory& traj) {
    out << csv_header() << '\n';
    out << std::setprecision(12);
    for (const auto& s : traj.samples) {
        out << s.t << ',' << s.C << ',' << s.eof;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                out << ',' << s.rho(r, c).real();
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                out << ',' << s.rho(r, c).imag();
        out << ',' << s.trace_error << ',' << s.min_eig << '\n';
    }
}

void emit_csv(const Trajectory& traj, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    write_csv(out, traj);
    out.flush();
    if (!out)
        throw std::runtime_error("failed writing '" + path + "'");
}

void write_toy_table(std::ostream& out, const std::vector<ToyRow>& rows) {
    out << "epsilon,g,beta,closed_form,numeric,abs_diff\n" << std::setprecision(12);
    for (const auto& r : rows)
        out << r.params.epsilon << ',' << r.params.g << ',' << r.params.beta << ',' << r.coherence.closed_form.real()
            << ',' << r.coherence.numeric.real() << ',' << std::abs(r.coherence.closed_form - r.coherence.numeric)
            << '\n';
}

void write_summary(std::ostream& out, const RunConfig& cfg, const ScenarioResult& res) {
    out << std::setprecision(12);
    out << "scenario = " << to_string(res.scenario) << '\n';
    out << "epsilon = " << cfg.epsilon << "\nJ = " << cfg.J << "\nlambda = " << cfg.lambda << "\ngamma = " << cfg.gamma
        << "\nbeta = " << cfg.beta << "\nL = " << cfg.L << "\nM = " << cfg.M << "\ndt = " << cfg.dt
        << "\ntEnd = " << cfg.tEnd << '\n';
    out << "gibbs_concurrence_hs = " << res.gibbs_concurrence << '\n';
    out << "gibbs_concurrence_exchange_closed_form = " << res.gibbs_concurrence_exchange << '\n';

    if (res.scenario == Scenario::toymodel) {
        double worst = 0.0;
        for (const auto& r : res.toy_table)
            worst = std::max(worst, std::abs(r.coherence.closed_form - r.coherence.numeric));
        out << "toy_grid_points = " << res.toy_table.size() << "\ntoy_max_abs_diff = " << worst << '\n';
        return;
    }

    out << "samples = " << res.trajectory.size() << '\n';
    out << "death_intervals = ";
    for (std::size_t i = 0; i < res.report.death_intervals.size(); ++i)
        out << (i ? ";" : "") << '[' << res.report.death_intervals[i].first << ','
            << res.report.death_intervals[i].second << ']';
    out << "\nrevival_times = ";
    for (std::size_t i = 0; i < res.report.revival_times.size(); ++i)
        out << (i ? ";" : "") << res.report.revival_times[i];
    out << "\nequilibrium_concurrence = " << equilibrium_concurrence(res.trajectory) << '\n';

    double max_trace = 0.0;
    double min_eig = 1.0;
    for (const auto& s : res.trajectory.samples) {
        max_trace = std::max(max_trace, s.trace_error);
        min_eig = std::min(min_eig, s.min_eig);
    }
    out << "max_trace_error = " << max_trace << "\nmin_eigenvalue = " << min_eig << '\n';
    if (!res.trajectory.empty())
        out << "initial_concurrence = " << res.trajectory.samples.front().C << '\n';
    if (res.convergence)
        out << "convergence_depth_delta = " << res.convergence->depth
            << "\nconvergence_matsubara_delta = " << res.convergence->matsubara << '\n';
}

std::size_t expected_sample_count(double t_end, double dt, int stride) {
    const auto steps = static_cast<long long>(std::llround(t_end / dt));
    return static_cast<std::size_t>(steps / stride) + 1;
}

} // namespace heomq
