// Synthetic cohort generator: emits an enrollment CSV with planted course
// blocks, for demos and for exercising the pipeline without real data.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "coursenet/enrollment.hpp"
#include "coursenet/errors.hpp"
#include "coursenet/synthetic.hpp"

int main(int argc, char** argv) {
    CLI::App app{"coursenet-synth: generate a synthetic enrollment CSV with "
                 "planted course blocks"};

    coursenet::SyntheticSpec spec;
    std::string output;

    app.add_option("--blocks", spec.blocks, "number of planted course blocks")
        ->capture_default_str();
    app.add_option("--courses-per-block", spec.courses_per_block,
                   "courses in each block")
        ->capture_default_str();
    app.add_option("--students-per-block", spec.students_per_block,
                   "students attached to each block")
        ->capture_default_str();
    app.add_option("--p-in", spec.p_in,
                   "enrollment probability inside the student's block")
        ->capture_default_str();
    app.add_option("--p-out", spec.p_out,
                   "enrollment probability outside the block")
        ->capture_default_str();
    app.add_option("--semesters", spec.semesters,
                   "semesters each student's courses are spread over")
        ->capture_default_str();
    app.add_option("--seed", spec.seed, "generator seed")
        ->capture_default_str();
    app.add_option("--major", spec.major, "major written on every record")
        ->capture_default_str();
    app.add_option("--output", output, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        const coursenet::SyntheticCohort synthetic =
            coursenet::generate_synthetic_cohort(spec);
        if (output.empty()) {
            coursenet::write_enrollments_csv(std::cout, synthetic.cohort);
        } else {
            std::ofstream os(output, std::ios::binary);
            if (!os) {
                throw coursenet::InputError("cannot open '" + output +
                                            "' for writing");
            }
            coursenet::write_enrollments_csv(os, synthetic.cohort);
        }
        return 0;
    } catch (const coursenet::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
