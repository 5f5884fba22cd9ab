#include "qrc/suites.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <stdexcept>
#include <thread>

#include "qrc/checks.hpp"

namespace qrc {

namespace {

using Task = std::function<VerificationReport()>;

// Board iteration: all (m, n, λ) with n <= m <= max_m, λ inside n×m.
void for_each_board(int max_m, const std::function<void(const Partition&, int, int)>& fn) {
    for (int m = 1; m <= max_m; ++m)
        for (int n = 1; n <= m; ++n)
            for (const Partition& shape : partitions_in_box(n, m)) fn(shape, m, n);
}

// Graph iteration: all (m, n, λ) with n <= m and m + n <= max_sum.
void for_each_graph_board(int max_sum,
                          const std::function<void(const Partition&, int, int)>& fn) {
    for (int m = 1; m <= max_sum - 1; ++m)
        for (int n = 1; n <= m && m + n <= max_sum; ++n)
            for (const Partition& shape : partitions_in_box(n, m)) fn(shape, m, n);
}

// Deduplicated shapes inside max_m × max_m for the board-free identities.
std::vector<Partition> shapes_in_square(int max_m) { return partitions_in_box(max_m, max_m); }

void add_f_ratio(std::vector<Task>& tasks, int B) {
    for (const Partition& shape : shapes_in_square(B))
        tasks.push_back([shape] { return check_F_ratio(shape); });
}

void add_df(std::vector<Task>& tasks, int B) {
    for (const Partition& shape : shapes_in_square(B))
        tasks.push_back([shape] { return check_DF(shape); });
}

void add_rook_identities(std::vector<Task>& tasks, int B) {
    for (const Partition& shape : shapes_in_square(B)) {
        tasks.push_back([shape] { return check_rook_gen(shape); });
        for (int m = std::max(1, shape.first_part()); m <= B; ++m)
            for (int i = 0; i <= std::min(shape.length(), m); ++i)
                tasks.push_back([shape, m, i] { return check_rook_linear_col(shape, m, i); });
        for (int n = std::max(1, shape.length()); n <= B; ++n)
            for (int k = 0; k <= shape.length(); ++k)
                tasks.push_back([shape, n, k] { return check_rook_linear_row(shape, n, k); });
        for (int k = 0; k <= shape.length(); ++k)
            tasks.push_back([shape, k] { return check_rook_quadratic(shape, k); });
    }
}

void add_hit_identities(std::vector<Task>& tasks, int B) {
    for_each_board(B, [&](const Partition& shape, int m, int n) {
        if (m > n)
            for (int k = 0; k <= n; ++k)
                tasks.push_back([shape, m, n, k] { return check_hit_linear_col(shape, m, n, k); });
        for (int k = 0; k < n; ++k)
            tasks.push_back([shape, m, n, k] { return check_hit_linear_row(shape, m, n, k); });
        for (int k = 0; k < n; ++k)
            tasks.push_back([shape, m, n, k] { return check_hit_quadratic(shape, m, n, k); });
    });
}

void add_keyrel(std::vector<Task>& tasks, int B) {
    for_each_board(B, [&](const Partition& shape, int m, int n) {
        for (int r = 0; r <= shape.length(); ++r)
            tasks.push_back([shape, m, n, r] { return check_keyrel(shape, m, n, r); });
    });
}

void add_qbinom(std::vector<Task>& tasks, int B) {
    for (int m = 1; m <= B; ++m)
        for (int n = 1; n <= m; ++n)
            for (int r = 0; r <= n; ++r)
                for (int i = r; i <= n; ++i)
                    tasks.push_back([m, n, r, i] { return check_qbinom_identity(m, n, r, i); });
}

void add_delcon(std::vector<Task>& tasks, int B) {
    for_each_board(B, [&](const Partition& shape, int m, int n) {
        if (shape.empty()) return;
        for (int corner : shape.corner_rows()) {
            tasks.push_back([shape, m, n, corner] { return check_delcon_hit(shape, m, n, corner); });
            tasks.push_back([shape, m, n, corner] { return check_delcon_gr(shape, m, n, corner); });
            if (m == n)
                tasks.push_back(
                    [shape, m, corner] { return check_delcon_square(shape, m, corner); });
        }
    });
}

void add_conjectures(std::vector<Task>& tasks, int B) {
    for_each_board(B, [&](const Partition& shape, int m, int n) {
        if (shape.empty()) return;
        for (int corner : shape.corner_rows()) {
            tasks.push_back(
                [shape, m, n, corner] { return check_conjecture_69(shape, m, n, corner); });
            tasks.push_back(
                [shape, m, n, corner] { return check_conjecture_poly(shape, m, n, corner); });
        }
    });
}

void add_statistics(std::vector<Task>& tasks, int B) {
    for (int m = 1; m <= B; ++m) tasks.push_back([m] { return check_stat_dstat(m); });
    for (const Partition& shape : shapes_in_square(B))
        tasks.push_back([shape] { return check_rook_conjugation(shape); });
}

void add_gp(std::vector<Task>& tasks, int B) {
    for_each_graph_board(B, [&](const Partition& shape, int m, int n) {
        tasks.push_back([shape, m, n] { return verify_gp(shape, m, n); });
    });
}

void add_an(std::vector<Task>& tasks, int B) {
    for_each_graph_board(B, [&](const Partition& shape, int m, int n) {
        tasks.push_back([shape, m, n] { return verify_an(shape, m, n); });
    });
}

void add_qhit_consistency(std::vector<Task>& tasks, int B) {
    for_each_board(B, [&](const Partition& shape, int m, int n) {
        tasks.push_back([shape, m, n] { return check_qhit_consistency(shape, m, n); });
        tasks.push_back([shape, m, n] { return check_board_resize(shape, m, n); });
        if (m == n) tasks.push_back([shape, m] { return check_complement(shape, m); });
    });
}

void add_rectangles(std::vector<Task>& tasks, int B) {
    for (int a = 1; a <= B; ++a)
        for (int b = 1; b <= B; ++b)
            tasks.push_back([a, b] { return check_rect_rook_closed(a, b); });
    for (int N = 1; N <= B; ++N)
        for (int m = 0; m <= N; ++m)
            for (int j = 0; j <= N; ++j)
                tasks.push_back([N, m, j] { return check_rect_hit_closed(N, m, j); });
    for (int m = 1; m <= B; ++m)
        for (int n = 1; n <= m; ++n)
            for (int k = 0; k <= n; ++k)
                tasks.push_back([m, n, k] { return check_thin_rect_closed(m, n, k); });
    for (int m = 1; m <= B; ++m) {
        for (int n = 1; n <= m; ++n) {
            for (int k = 0; k <= n; ++k) {
                tasks.push_back([m, n, k] { return check_gp_rectangle(m, n, k); });
                tasks.push_back([m, n, k] { return check_gp_rectangle_inverse(m, n, k); });
                tasks.push_back([m, n, k] { return check_an_rectangle(m, n, k); });
            }
            for (int i = 0; i <= n; ++i) {
                if (m == n && i == n) continue;  // closed form needs m > n there
                tasks.push_back([m, n, i] { return check_y_function(m, n, i); });
            }
        }
    }
}

void add_staircase(std::vector<Task>& tasks, int B) {
    for (int m = 1; m <= B; ++m)
        for (int n = 1; n <= m; ++n)
            tasks.push_back([m, n] { return check_staircase_matrices(m, n); });
    for_each_board(B, [&](const Partition& shape, int m, int n) {
        tasks.push_back([shape, m, n] { return check_staircase_coeffs(shape, m, n); });
        tasks.push_back([shape, m, n] { return conjecture_56_check(shape, m, n); });
    });
    for (int n = 1; n <= B; ++n)
        tasks.push_back([n] { return check_eulerian_correspondence(n); });
}

void add_llt(std::vector<Task>& tasks, int B) {
    for_each_graph_board(B, [&](const Partition& shape, int m, int n) {
        tasks.push_back([shape, m, n] { return check_llt_gp(shape, m, n); });
        tasks.push_back([shape, m, n] { return check_llt_an(shape, m, n); });
    });
}

void add_coloring(std::vector<Task>& tasks, int B) {
    for_each_graph_board(B, [&](const Partition& shape, int m, int n) {
        for (int M = 1; M <= m + n; ++M)
            tasks.push_back(
                [shape, m, n, M] { return verify_coloring_recursions(shape, m, n, M); });
    });
}

struct SuiteDef {
    const char* name;
    void (*add)(std::vector<Task>&, int);
};

constexpr SuiteDef kSuites[] = {
    {"f-ratio", add_f_ratio},
    {"df", add_df},
    {"rook-identities", add_rook_identities},
    {"hit-identities", add_hit_identities},
    {"keyrel", add_keyrel},
    {"qbinom", add_qbinom},
    {"delcon", add_delcon},
    {"conjectures", add_conjectures},
    {"statistics", add_statistics},
    {"gp-theorem", add_gp},
    {"an-theorem", add_an},
    {"qhit-consistency", add_qhit_consistency},
    {"rectangles", add_rectangles},
    {"staircase", add_staircase},
    {"llt-relations", add_llt},
    {"coloring-recursions", add_coloring},
};

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const SuiteDef& s : kSuites) names.emplace_back(s.name);
    names.emplace_back("all");
    return names;
}

SuiteResult run_suite(const std::string& name, int max_m, int jobs) {
    std::vector<Task> tasks;
    bool found = false;
    for (const SuiteDef& s : kSuites) {
        if (name == s.name || name == "all") {
            s.add(tasks, max_m);
            found = true;
        }
    }
    if (!found && name != "all") throw std::domain_error("unknown suite '" + name + "'");

    SuiteResult result;
    result.suite = name;
    result.max_m = max_m;
    result.reports.resize(tasks.size());

    int workers = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    if (tasks.empty())
        workers = 1;
    else
        workers = std::min(workers, static_cast<int>(tasks.size()));

    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const size_t idx = next.fetch_add(1);
            if (idx >= tasks.size()) return;
            try {
                result.reports[idx] = tasks[idx]();
            } catch (const std::exception& e) {
                VerificationReport r;
                r.identity = "exception";
                r.holds = false;
                r.witness = e.what();
                result.reports[idx] = r;
            }
        }
    };
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    std::sort(result.reports.begin(), result.reports.end(),
              [](const VerificationReport& a, const VerificationReport& b) {
                  return a.key() < b.key();
              });
    for (const VerificationReport& r : result.reports) {
        if (r.conjecture)
            ++(r.holds ? result.conjectures_confirmed : result.conjectures_refuted);
        else
            ++(r.holds ? result.identities_passed : result.identities_failed);
    }
    return result;
}

}  // namespace qrc
