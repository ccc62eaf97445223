#include <bhfs/core/schedule.hpp>

#include <bhfs/core/error.hpp>

#include "simulate.hpp"

#include <algorithm>
#include <limits>

namespace bhfs {

namespace detail {

namespace {

struct Slot {
    int pos = -1;         ///< position (in seq) of the occupying job, -1 when free
    Time ready = 0;       ///< end of processing of the occupying job
    Time free_since = 0;  ///< instant the machine last became free
};

}  // namespace

void simulate(const Instance& instance, std::span<const JobId> seq, Timetable& out)
{
    const int length = static_cast<int>(seq.size());
    const int stages = instance.stages();
    const int last = stages - 1;

    out.length = length;
    out.stages = stages;
    out.start.assign(static_cast<std::size_t>(length) * stages, 0);
    out.completion.assign(static_cast<std::size_t>(length) * stages, 0);
    out.machine.assign(static_cast<std::size_t>(length) * stages, -1);
    if (length == 0) return;

    std::vector<Slot> slots(instance.total_machines());
    std::vector<int> free_slots;
    std::vector<int> waiting;
    free_slots.reserve(slots.size());
    waiting.reserve(slots.size());

    auto collect_free = [&](int stage) {
        free_slots.clear();
        for (int s = instance.machine_offset(stage); s < instance.machine_offset(stage + 1); ++s)
            if (slots[s].pos < 0) free_slots.push_back(s);
        std::stable_sort(free_slots.begin(), free_slots.end(), [&](int a, int b) {
            return slots[a].free_since < slots[b].free_since;
        });
    };

    auto enter = [&](int pos, int stage, int slot, Time t) {
        const auto cell = out.at(pos, stage);
        out.start[cell] = t;
        out.machine[cell] = slot;
        slots[slot].pos = pos;
        slots[slot].ready = t + instance.proc(seq[pos], stage);
    };

    int next_entry = 0;
    int finished = 0;
    Time now = 0;
    while (true) {
        bool moved = true;
        while (moved) {
            moved = false;

            for (int s = instance.machine_offset(last); s < instance.machine_offset(last + 1); ++s) {
                Slot& slot = slots[s];
                if (slot.pos >= 0 && slot.ready <= now) {
                    out.completion[out.at(slot.pos, last)] = slot.ready;
                    slot.free_since = slot.ready;
                    slot.pos = -1;
                    ++finished;
                    moved = true;
                }
            }

            // Downstream first so that a departure cascades upstream within the same instant.
            for (int stage = last; stage >= 1; --stage) {
                collect_free(stage);
                if (free_slots.empty()) continue;
                waiting.clear();
                for (int s = instance.machine_offset(stage - 1); s < instance.machine_offset(stage);
                     ++s)
                    if (slots[s].pos >= 0 && slots[s].ready <= now) waiting.push_back(s);
                if (waiting.empty()) continue;
                std::sort(waiting.begin(), waiting.end(), [&](int a, int b) {
                    if (slots[a].ready != slots[b].ready) return slots[a].ready < slots[b].ready;
                    return slots[a].pos < slots[b].pos;
                });
                const auto moves = std::min(free_slots.size(), waiting.size());
                for (std::size_t i = 0; i < moves; ++i) {
                    Slot& from = slots[waiting[i]];
                    const int pos = from.pos;
                    out.completion[out.at(pos, stage - 1)] = now;
                    from.pos = -1;
                    from.free_since = now;
                    enter(pos, stage, free_slots[i], now);
                }
                moved = true;
            }

            if (next_entry < length) {
                collect_free(0);
                for (int slot : free_slots) {
                    if (next_entry == length) break;
                    enter(next_entry++, 0, slot, now);
                    moved = true;
                }
            }
        }

        if (finished == length) break;
        Time next = std::numeric_limits<Time>::max();
        for (const Slot& slot : slots)
            if (slot.pos >= 0 && slot.ready > now) next = std::min(next, slot.ready);
        // The last stage always drains, so some job is still processing here.
        now = next;
    }
}

}  // namespace detail

namespace {

Schedule to_schedule(const Instance& instance, std::span<const JobId> seq,
                     const detail::Timetable& table)
{
    const auto n = static_cast<std::size_t>(instance.jobs());
    const auto stages = static_cast<std::size_t>(instance.stages());
    Schedule s{Matrix<Time>(n, stages), Matrix<Time>(n, stages), Matrix<Time>(n, stages),
               Matrix<int>(n, stages, -1),
               std::vector<std::vector<Occupation>>(instance.total_machines())};

    for (int pos = 0; pos < table.length; ++pos) {
        const JobId job = seq[pos];
        for (int k = 0; k < instance.stages(); ++k) {
            const auto cell = table.at(pos, k);
            const int flat = table.machine[cell];
            s.start(job, k) = table.start[cell];
            s.completion(job, k) = table.completion[cell];
            s.block(job, k) = table.completion[cell] - table.start[cell] - instance.proc(job, k);
            s.machine(job, k) = flat - instance.machine_offset(k);
            s.timelines[flat].push_back({job, table.start[cell], table.completion[cell]});
        }
    }
    for (auto& line : s.timelines)
        std::stable_sort(line.begin(), line.end(), [](const Occupation& a, const Occupation& b) {
            return a.start != b.start ? a.start < b.start : a.end < b.end;
        });
    return s;
}

}  // namespace

Schedule decode_sequence(const Instance& instance, std::span<const JobId> seq)
{
    if (!is_valid_sequence(instance, seq))
        throw InvalidInput("decode: sequence contains repeated or out-of-range jobs");
    detail::Timetable table;
    detail::simulate(instance, seq, table);
    return to_schedule(instance, seq, table);
}

Schedule decode(const Instance& instance, std::span<const JobId> perm)
{
    if (!is_permutation(instance, perm))
        throw InvalidInput("decode: expected a permutation of " + std::to_string(instance.jobs()) +
                           " jobs, got " + std::to_string(perm.size()) + " entries");
    return decode_sequence(instance, perm);
}

}  // namespace bhfs
