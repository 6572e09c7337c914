#include "ifsx/ifsx.h"

#include <cstdio>
#include <cstring>
#include <new>
#include <string>

#include "../core/io.hpp"
#include "../core/polygonal.hpp"
#include "../core/svg.hpp"
#include "../core/verify.hpp"
#include "../core/witnesses.hpp"

struct ifsx_set {
    ifsx::CompactSet value;
};

struct ifsx_system {
    ifsx::FunctionSystem value;
};

namespace {

thread_local std::string g_last_error = "no error";

ifsx_status code_of(ifsx::ErrorCode c) {
    switch (c) {
        case ifsx::ErrorCode::invalid_argument: return IFSX_ERR_INVALID_ARGUMENT;
        case ifsx::ErrorCode::dimension_mismatch: return IFSX_ERR_DIMENSION_MISMATCH;
        case ifsx::ErrorCode::parse_error: return IFSX_ERR_PARSE;
        case ifsx::ErrorCode::not_converged: return IFSX_ERR_NOT_CONVERGED;
        case ifsx::ErrorCode::io_error: return IFSX_ERR_IO;
        case ifsx::ErrorCode::unsupported: return IFSX_ERR_UNSUPPORTED;
        case ifsx::ErrorCode::infeasible: return IFSX_ERR_INFEASIBLE;
    }
    return IFSX_ERR_INTERNAL;
}

template <typename F>
ifsx_status guarded(F&& body) {
    try {
        body();
        return IFSX_OK;
    } catch (const ifsx::Error& e) {
        g_last_error = e.what();
        return code_of(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return IFSX_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return IFSX_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

ifsx_status require(bool ok, const char* message) {
    if (ok) return IFSX_OK;
    g_last_error = message;
    return IFSX_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* ifsx_last_error(void) { return g_last_error.c_str(); }

void ifsx_string_free(char* s) { delete[] s; }
void ifsx_set_free(ifsx_set* s) { delete s; }
void ifsx_system_free(ifsx_system* s) { delete s; }

ifsx_status ifsx_set_from_coords(const double* coords, size_t npoints, size_t dim,
                                 ifsx_set** out) {
    if (auto st = require(coords && out, "null pointer argument")) return st;
    return guarded([&] {
        std::vector<ifsx::Point> pts;
        pts.reserve(npoints);
        for (size_t i = 0; i < npoints; ++i) {
            ifsx::Point p;
            p.coords.assign(coords + i * dim, coords + (i + 1) * dim);
            pts.push_back(std::move(p));
        }
        *out = new ifsx_set{ifsx::CompactSet(std::move(pts), dim)};
    });
}

ifsx_status ifsx_set_load_csv(const char* path, ifsx_set** out) {
    if (auto st = require(path && out, "null pointer argument")) return st;
    return guarded([&] { *out = new ifsx_set{ifsx::load_cloud(path)}; });
}

ifsx_status ifsx_set_save_csv(const ifsx_set* s, const char* path) {
    if (auto st = require(s && path, "null pointer argument")) return st;
    return guarded([&] { ifsx::save_text(path, ifsx::cloud_to_csv(s->value)); });
}

ifsx_status ifsx_set_to_csv(const ifsx_set* s, char** csv_out) {
    if (auto st = require(s && csv_out, "null pointer argument")) return st;
    return guarded([&] { *csv_out = dup_string(ifsx::cloud_to_csv(s->value)); });
}

size_t ifsx_set_size(const ifsx_set* s) { return s ? s->value.size() : 0; }
size_t ifsx_set_dim(const ifsx_set* s) { return s ? s->value.dim() : 0; }

ifsx_status ifsx_set_coords(const ifsx_set* s, double* buffer, size_t buffer_len) {
    if (auto st = require(s && buffer, "null pointer argument")) return st;
    if (auto st = require(buffer_len >= s->value.size() * s->value.dim(), "buffer too small"))
        return st;
    return guarded([&] {
        size_t i = 0;
        for (const auto& p : s->value.points())
            for (double c : p.coords) buffer[i++] = c;
    });
}

ifsx_status ifsx_system_parse_json(const char* json_text, ifsx_system** out) {
    if (auto st = require(json_text && out, "null pointer argument")) return st;
    return guarded([&] { *out = new ifsx_system{ifsx::system_from_json_text(json_text)}; });
}

ifsx_status ifsx_attractor_run(const ifsx_system* sys, double tol, size_t max_iter,
                               double resolution, ifsx_set** attractor_out,
                               size_t* iterations_out, double* residual_out,
                               int* converged_out) {
    if (auto st = require(sys && attractor_out, "null pointer argument")) return st;
    return guarded([&] {
        ifsx::AttractorResult res = ifsx::attractor(sys->value, tol, max_iter, resolution);
        if (iterations_out) *iterations_out = res.iterations;
        if (residual_out) *residual_out = res.residual;
        if (converged_out) *converged_out = res.converged ? 1 : 0;
        *attractor_out = new ifsx_set{std::move(res.attractor)};
    });
}

ifsx_status ifsx_hausdorff(const ifsx_set* a, const ifsx_set* b, double* distance_out,
                           char** witness_json_out) {
    if (auto st = require(a && b && distance_out, "null pointer argument")) return st;
    return guarded([&] {
        ifsx::HausdorffReport r = ifsx::hausdorff_distance(a->value, b->value);
        *distance_out = r.distance;
        if (witness_json_out) {
            auto point_json = [](const ifsx::Point& p) {
                std::string out = "[";
                for (size_t i = 0; i < p.dim(); ++i) {
                    if (i) out += ", ";
                    char buf[64];
                    std::snprintf(buf, sizeof(buf), "%.17g", p.coords[i]);
                    out += buf;
                }
                return out + "]";
            };
            std::string json = "{\"witness_ab\": [" + point_json(r.witness_ab.first) + ", " +
                   point_json(r.witness_ab.second) + "], \"witness_ba\": [" +
                   point_json(r.witness_ba.first) + ", " + point_json(r.witness_ba.second) +
                   "]}\n";
            *witness_json_out = dup_string(json);
        }
    });
}

ifsx_status ifsx_approx_study_run(const ifsx_system* sys, const size_t* k_schedule,
                                  size_t schedule_len, double tol, size_t max_iter,
                                  double resolution, char** csv_out) {
    if (auto st = require(sys && k_schedule && csv_out && schedule_len > 0,
                          "null pointer or empty schedule"))
        return st;
    return guarded([&] {
        std::vector<size_t> schedule(k_schedule, k_schedule + schedule_len);
        ifsx::ApproximationStudy study =
            ifsx::approximation_study(sys->value, schedule, tol, max_iter, resolution);
        *csv_out = dup_string(ifsx::study_to_csv(study));
    });
}

ifsx_status ifsx_witness_build(const char* kind, size_t param, char** json_out,
                               int* all_pass_out) {
    if (auto st = require(kind && json_out, "null pointer argument")) return st;
    return guarded([&] {
        std::string k = kind;
        std::string json;
        bool all_pass = false;
        if (k == "prop-p" || k == "prop_p") {
            ifsx::PropPWitness w = ifsx::build_prop_p(param);
            all_pass = w.audit.all_pass();
            json = ifsx::witness_to_json_text(w);
        } else if (k == "ladder") {
            ifsx::LadderWitness w = ifsx::build_ladder(param);
            all_pass = w.audit.all_pass();
            json = ifsx::witness_to_json_text(w);
        } else if (k == "intervals") {
            ifsx::IntervalWitness w = ifsx::build_interval_witness(param);
            all_pass = w.audit.all_pass();
            json = ifsx::witness_to_json_text(w);
        } else {
            ifsx::fail(ifsx::ErrorCode::invalid_argument,
                       "unknown witness kind '" + k + "' (expected prop-p, ladder, intervals)");
        }
        if (all_pass_out) *all_pass_out = all_pass ? 1 : 0;
        *json_out = dup_string(json);
    });
}

ifsx_status ifsx_separation_search(const char* witness_json, size_t n, size_t trials,
                                   uint64_t seed, double tol, size_t max_iter,
                                   double resolution, char** report_json_out,
                                   int* violated_out) {
    if (auto st = require(witness_json && report_json_out, "null pointer argument")) return st;
    return guarded([&] {
        ifsx::LadderSummary summary = ifsx::ladder_summary_from_json_text(witness_json);
        size_t system_size = n == 0 ? summary.n : n;
        ifsx::SearchParams params;
        params.tol = tol;
        params.max_iter = max_iter;
        params.resolution = resolution;
        ifsx::SearchReport report = ifsx::separation_search(summary.points, summary.delta,
                                                            system_size, trials, seed, params);
        if (violated_out) *violated_out = report.violated ? 1 : 0;
        *report_json_out = dup_string(ifsx::search_report_to_json_text(report));
    });
}

ifsx_status ifsx_render_svg(const ifsx_set* s, char** svg_out) {
    if (auto st = require(s && svg_out, "null pointer argument")) return st;
    return guarded([&] { *svg_out = dup_string(ifsx::render_svg(s->value)); });
}

}  // extern "C"
