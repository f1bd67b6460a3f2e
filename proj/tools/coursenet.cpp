// Command-line front end: enrollment CSV in, course-community report and
// graph exports out. Exit codes: 0 ok, 1 bad input, 2 computation failure.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "coursenet/errors.hpp"
#include "coursenet/pipeline.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "coursenet: build a weighted course network from enrollment records,\n"
        "detect course communities, and derive typical study paths"};

    coursenet::PipelineConfig cfg;
    std::string export_format;

    app.add_option("--input", cfg.input_path,
                   "enrollment CSV (student_id,course_id,course_name,year,"
                   "term,status,major,department,study_type)")
        ->required();
    app.add_option("--major", cfg.major, "keep only records with this major");
    app.add_option("--enroll-from", cfg.enroll_from,
                   "keep only enrollments from this year on");
    app.add_option("--enroll-to", cfg.enroll_to,
                   "keep only enrollments up to this year");
    app.add_option("--outlier-threshold", cfg.outlier_threshold,
                   "drop courses taken by less than this share of students")
        ->capture_default_str();
    app.add_option("--hub-method", cfg.hub_method,
                   "hub detection: dd (strength outliers), gt (mandatory "
                   "list), or both")
        ->capture_default_str();
    app.add_option("--mandatory-list", cfg.mandatory_list_path,
                   "file with one mandatory course id per line (for gt)");
    app.add_option("--include-failed", cfg.include_failed,
                   "count failed completions as course participation")
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "seed for the clustering node order")
        ->capture_default_str();
    app.add_option("--min-gain", cfg.min_gain,
                   "minimum modularity gain to accept a move")
        ->capture_default_str();
    app.add_option("--refine-guard", cfg.refine_guard,
                   "re-cluster communities whose split keeps every part's "
                   "inter/intra ratio at or below this value");
    app.add_option("--semester-cap", cfg.semester_cap,
                   "ignore semesters past this position in a student's "
                   "timeline")
        ->capture_default_str();
    app.add_option("--export-format", export_format,
                   "course-graph export format: graphml, gexf, or dot");
    app.add_option("--out-dir", cfg.out_dir,
                   "directory for the report and graph files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (!export_format.empty()) {
            cfg.export_format = coursenet::parse_export_format(export_format);
        }
        const coursenet::PipelineResult result = coursenet::run_pipeline(cfg);
        std::cout << result.report_text;
        if (cfg.out_dir) {
            std::cerr << "wrote " << result.written_files.size()
                      << " files to " << *cfg.out_dir << "\n";
        }
        return 0;
    } catch (const coursenet::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const coursenet::ComputeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
