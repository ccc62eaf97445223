#include <bhfs/exact/milp.hpp>

#include <bhfs/core/error.hpp>

namespace bhfs {

int MilpModel::var(const std::string& name) const
{
    auto found = find_var(name);
    if (!found) throw InvalidInput("MILP model has no variable " + name);
    return *found;
}

std::optional<int> MilpModel::find_var(const std::string& name) const
{
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

void MilpModel::reindex()
{
    index_.clear();
    for (std::size_t i = 0; i < variables.size(); ++i)
        index_.emplace(variables[i].name, static_cast<int>(i));
}

namespace {

std::string join(std::string_view base, std::initializer_list<int> indices)
{
    std::string out(base);
    for (int i : indices) {
        out += '_';
        out += std::to_string(i);
    }
    return out;
}

class Builder {
public:
    explicit Builder(MilpModel& model) : model_(model) {}

    int add_var(std::string name, VarKind kind)
    {
        model_.variables.push_back({std::move(name), kind, 0.0, std::nullopt});
        return static_cast<int>(model_.variables.size()) - 1;
    }

    void add_row(Constraint family, std::initializer_list<int> indices, std::vector<Term> terms,
                 Sense sense, double rhs)
    {
        model_.rows.push_back(
            {join(constraint_tag(family), indices), family, std::move(terms), sense, rhs});
    }

private:
    MilpModel& model_;
};

}  // namespace

MilpModel build_milp(const Instance& instance, const ObjectiveSpec& objective)
{
    const int n = instance.jobs();
    const int stages = instance.stages();
    const int last = stages - 1;

    MilpModel model;
    model.instance_id = instance.id();
    model.big_m = 1;
    for (int k = 0; k < stages; ++k) model.big_m += instance.stage_workload(k);
    const double bigm = static_cast<double>(model.big_m);

    Builder b(model);
    // (job, stage) and (job, stage, machine) indexed variable blocks.
    std::vector<int> start(n * stages), completion(n * stages), block(n * stages);
    std::vector<int> machine_block(n * instance.total_machines());
    std::vector<int> assign(n * instance.total_machines()), first(n * instance.total_machines());
    std::vector<int> idle(instance.total_machines()), latest(instance.total_machines()),
        earliest(instance.total_machines());
    std::vector<int> precede(static_cast<std::size_t>(n) * n * stages, -1);

    auto js = [&](int i, int k) { return i * stages + k; };
    auto jm = [&](int i, int k, int m) { return i * instance.total_machines() + instance.machine_offset(k) + m; };
    auto mm = [&](int k, int m) { return instance.machine_offset(k) + m; };
    auto jjk = [&](int i, int j, int k) { return (static_cast<std::size_t>(i) * n + j) * stages + k; };

    for (int i = 0; i < n; ++i)
        for (int k = 0; k < stages; ++k) start[js(i, k)] = b.add_var(join("S", {i, k}), VarKind::Continuous);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < stages; ++k)
            completion[js(i, k)] = b.add_var(join("C", {i, k}), VarKind::Continuous);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < stages; ++k) block[js(i, k)] = b.add_var(join("BT", {i, k}), VarKind::Continuous);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < stages; ++k)
            for (int m = 0; m < instance.machines(k); ++m)
                machine_block[jm(i, k, m)] = b.add_var(join("BTM", {i, k, m}), VarKind::Continuous);
    for (int k = 0; k < stages; ++k)
        for (int m = 0; m < instance.machines(k); ++m) idle[mm(k, m)] = b.add_var(join("Idle", {k, m}), VarKind::Continuous);
    for (int k = 0; k < stages; ++k)
        for (int m = 0; m < instance.machines(k); ++m) latest[mm(k, m)] = b.add_var(join("LC", {k, m}), VarKind::Continuous);
    for (int k = 0; k < stages; ++k)
        for (int m = 0; m < instance.machines(k); ++m)
            earliest[mm(k, m)] = b.add_var(join("ES", {k, m}), VarKind::Continuous);
    const int cmax = b.add_var("Cmax", VarKind::Continuous);
    const int tec = b.add_var("TEC", VarKind::Continuous);
    const int tbt = b.add_var("TBT", VarKind::Continuous);
    const int tidle = b.add_var("Tidle", VarKind::Continuous);
    const bool augmented = objective.other_upper && objective.augmentation > 0.0;
    const int slack = augmented ? b.add_var("eps_slack", VarKind::Continuous) : -1;

    for (int i = 0; i < n; ++i)
        for (int k = 0; k < stages; ++k)
            for (int m = 0; m < instance.machines(k); ++m) assign[jm(i, k, m)] = b.add_var(join("X", {i, k, m}), VarKind::Binary);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < stages; ++k)
            for (int m = 0; m < instance.machines(k); ++m) first[jm(i, k, m)] = b.add_var(join("Q", {i, k, m}), VarKind::Binary);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                for (int k = 0; k < stages; ++k) precede[jjk(i, j, k)] = b.add_var(join("Z", {i, j, k}), VarKind::Binary);
    model.reindex();

    using enum Sense;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < stages; ++k) {
            std::vector<Term> t;
            for (int m = 0; m < instance.machines(k); ++m) t.push_back({assign[jm(i, k, m)], 1});
            b.add_row(Constraint::Assignment, {i, k}, std::move(t), Equal, 1);
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < stages; ++k)
                b.add_row(Constraint::OrderExclusive, {i, j, k},
                          {{precede[jjk(i, j, k)], 1}, {precede[jjk(j, i, k)], 1}}, LessEqual, 1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < stages; ++k)
                for (int m = 0; m < instance.machines(k); ++m)
                    b.add_row(Constraint::OrderLinked, {i, j, k, m},
                              {{precede[jjk(i, j, k)], 1}, {precede[jjk(j, i, k)], 1},
                               {assign[jm(i, k, m)], -1}, {assign[jm(j, k, m)], -1}},
                              GreaterEqual, -1);
    // S_j - C_i + M(3 - X_i - X_j - Z_ij) >= 0
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            for (int k = 0; k < stages; ++k)
                for (int m = 0; m < instance.machines(k); ++m)
                    b.add_row(Constraint::NoOverlap, {i, j, k, m},
                              {{start[js(j, k)], 1}, {completion[js(i, k)], -1},
                               {assign[jm(i, k, m)], -bigm}, {assign[jm(j, k, m)], -bigm},
                               {precede[jjk(i, j, k)], -bigm}},
                              GreaterEqual, -3 * bigm);
        }
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < stages; ++k)
            b.add_row(Constraint::TimingBalance, {i, k},
                      {{completion[js(i, k)], 1}, {start[js(i, k)], -1}, {block[js(i, k)], -1}}, Equal,
                      static_cast<double>(instance.proc(i, k)));
    for (int i = 0; i < n; ++i) b.add_row(Constraint::LastStageNoBlock, {i}, {{block[js(i, last)], 1}}, Equal, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < last; ++k)
            b.add_row(Constraint::StageLink, {i, k}, {{completion[js(i, k)], 1}, {start[js(i, k + 1)], -1}},
                      Equal, 0);
    for (int i = 0; i < n; ++i)
        b.add_row(Constraint::MakespanBound, {i}, {{cmax, 1}, {completion[js(i, last)], -1}}, GreaterEqual, 0);
    {
        std::vector<Term> t{{tbt, 1}};
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < last; ++k) t.push_back({block[js(i, k)], -1});
        b.add_row(Constraint::TotalBlocking, {}, std::move(t), Equal, 0);
    }

    auto per_job_machine = [&](Constraint family, auto terms, Sense sense, double rhs) {
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < stages; ++k)
                for (int m = 0; m < instance.machines(k); ++m) b.add_row(family, {i, k, m}, terms(i, k, m), sense, rhs);
    };
    // C_ik <= LC_km + M(1 - X_ikm)
    per_job_machine(Constraint::LatestCompletion, [&](int i, int k, int m) {
        return std::vector<Term>{{completion[js(i, k)], 1}, {latest[mm(k, m)], -1}, {assign[jm(i, k, m)], bigm}};
    }, LessEqual, bigm);
    // S_ik >= ES_km - M(1 - Q_ikm)
    per_job_machine(Constraint::FirstStartLower, [&](int i, int k, int m) {
        return std::vector<Term>{{start[js(i, k)], 1}, {earliest[mm(k, m)], -1}, {first[jm(i, k, m)], -bigm}};
    }, GreaterEqual, -bigm);
    // S_ik <= ES_km + M(1 - Q_ikm)
    per_job_machine(Constraint::FirstStartUpper, [&](int i, int k, int m) {
        return std::vector<Term>{{start[js(i, k)], 1}, {earliest[mm(k, m)], -1}, {first[jm(i, k, m)], bigm}};
    }, LessEqual, bigm);
    // S_ik >= ES_km - M(1 - X_ikm)
    per_job_machine(Constraint::StartAfterTurnOn, [&](int i, int k, int m) {
        return std::vector<Term>{{start[js(i, k)], 1}, {earliest[mm(k, m)], -1}, {assign[jm(i, k, m)], -bigm}};
    }, GreaterEqual, -bigm);
    per_job_machine(Constraint::FirstImpliesAssigned, [&](int i, int k, int m) {
        return std::vector<Term>{{first[jm(i, k, m)], 1}, {assign[jm(i, k, m)], -1}};
    }, LessEqual, 0);
    for (int k = 0; k < stages; ++k)
        for (int m = 0; m < instance.machines(k); ++m) {
            std::vector<Term> t;
            for (int i = 0; i < n; ++i) t.push_back({first[jm(i, k, m)], 1});
            b.add_row(Constraint::SingleFirst, {k, m}, std::move(t), LessEqual, 1);
        }
    for (int k = 0; k < stages; ++k)
        for (int m = 0; m < instance.machines(k); ++m) {
            std::vector<Term> t;
            for (int i = 0; i < n; ++i) t.push_back({assign[jm(i, k, m)], 1});
            for (int i = 0; i < n; ++i) t.push_back({first[jm(i, k, m)], -bigm});
            b.add_row(Constraint::UsedHasFirst, {k, m}, std::move(t), LessEqual, 0);
        }
    // BTM_ikm >= BT_ik - M(1 - X_ikm)
    per_job_machine(Constraint::MachineBlockLower, [&](int i, int k, int m) {
        return std::vector<Term>{{machine_block[jm(i, k, m)], 1}, {block[js(i, k)], -1}, {assign[jm(i, k, m)], -bigm}};
    }, GreaterEqual, -bigm);
    // BTM_ikm <= BT_ik + M(1 - X_ikm)
    per_job_machine(Constraint::MachineBlockUpper, [&](int i, int k, int m) {
        return std::vector<Term>{{machine_block[jm(i, k, m)], 1}, {block[js(i, k)], -1}, {assign[jm(i, k, m)], bigm}};
    }, LessEqual, bigm);
    per_job_machine(Constraint::MachineBlockZero, [&](int i, int k, int m) {
        return std::vector<Term>{{machine_block[jm(i, k, m)], 1}, {assign[jm(i, k, m)], -bigm}};
    }, LessEqual, 0);
    // Idle_km = LC_km - ES_km - sum_i P_ik X_ikm - sum_i BTM_ikm
    for (int k = 0; k < stages; ++k)
        for (int m = 0; m < instance.machines(k); ++m) {
            std::vector<Term> t{{idle[mm(k, m)], 1}, {latest[mm(k, m)], -1}, {earliest[mm(k, m)], 1}};
            for (int i = 0; i < n; ++i)
                if (instance.proc(i, k) != 0) t.push_back({assign[jm(i, k, m)], static_cast<double>(instance.proc(i, k))});
            for (int i = 0; i < n; ++i) t.push_back({machine_block[jm(i, k, m)], 1});
            b.add_row(Constraint::MachineIdle, {k, m}, std::move(t), Equal, 0);
        }
    {
        std::vector<Term> t{{tidle, 1}};
        for (int f = 0; f < instance.total_machines(); ++f) t.push_back({idle[f], -1});
        b.add_row(Constraint::TotalIdle, {}, std::move(t), Equal, 0);
    }
    {
        std::vector<Term> t{{tec, 1}};
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < stages; ++k)
                if (instance.energy_block(k) != 0)
                    t.push_back({block[js(i, k)], -static_cast<double>(instance.energy_block(k))});
        for (int k = 0; k < stages; ++k)
            for (int m = 0; m < instance.machines(k); ++m)
                if (instance.energy_idle(k) != 0)
                    t.push_back({idle[mm(k, m)], -static_cast<double>(instance.energy_idle(k))});
        b.add_row(Constraint::TotalEnergy, {}, std::move(t), Equal,
                  static_cast<double>(instance.processing_energy()));
    }

    const int primary = objective.primary == Criterion::Makespan ? cmax : tec;
    const int other = objective.primary == Criterion::Makespan ? tec : cmax;
    model.objective = {{primary, 1}};
    if (objective.other_lower)
        model.rows.push_back({"eps_lower", Constraint::ObjectiveBound, {{other, 1}}, GreaterEqual,
                              *objective.other_lower});
    if (objective.other_upper) {
        if (augmented) {
            model.rows.push_back({"eps_upper", Constraint::ObjectiveBound, {{other, 1}, {slack, 1}}, Equal,
                                  *objective.other_upper});
            model.objective.push_back({slack, -objective.augmentation});
        } else {
            model.rows.push_back({"eps_upper", Constraint::ObjectiveBound, {{other, 1}}, LessEqual,
                                  *objective.other_upper});
        }
    }
    return model;
}

MilpSize milp_size(int jobs, int stages, int total_machines)
{
    const std::size_t n = jobs, k = stages, sm = total_machines;
    const std::size_t pairs = n * (n - 1) / 2;
    MilpSize s;
    s.continuous = 3 * n * k + n * sm + 3 * sm + 4;
    s.binary = 2 * n * sm + n * (n - 1) * k;
    s.rows = n * k                // assignment
             + pairs * k          // order exclusivity
             + pairs * sm         // order linkage
             + 2 * pairs * sm     // no overlap (ordered pairs)
             + n * k              // timing balance
             + n                  // last stage
             + n * (k - 1)        // stage linking
             + n                  // makespan bound
             + 1                  // total blocking
             + 5 * n * sm         // latest completion, first start x2, turn-on, first implies assigned
             + 2 * sm             // single first, used has first
             + 3 * n * sm         // machine blocking copies
             + sm                 // machine idle
             + 2;                 // total idle, total energy
    return s;
}

}  // namespace bhfs
