#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "grasp/ci_statement.hpp"
#include "grasp/dag.hpp"
#include "grasp/scoring.hpp"

namespace grasp {

// Text formats. Vertices are 1-based on disk and 0-based in memory; blank
// lines and `#` comments are ignored everywhere.
//
//   DAG file:      `dag <m>` then one `<j> <k>` line per edge j->k.
//   CPDAG file:    same, with additional `<j> -- <k>` lines for undirected
//                  edges.
//   CI file:       `ci <m>` then `<i> <j> | <z1> <z2> ...` lines; the part
//                  right of `|` may be empty.
//   Model file:    a `dag` block followed by an optional `ci` block listing
//                  extra independencies beyond the DAG's own.
//   Dataset file:  comma-separated, first row variable names, numeric cells;
//                  whole lines starting with `#` are comments.

struct CiFile {
    int m = 0;
    std::vector<CiStatement> statements;
};

struct ModelFile {
    Dag dag;
    std::vector<CiStatement> extra;
};

Dag read_dag(std::istream& in);
Dag read_dag_file(const std::string& path);
void write_dag(std::ostream& out, const Dag& g);
void write_dag_file(const std::string& path, const Dag& g);

Cpdag read_cpdag(std::istream& in);
Cpdag read_cpdag_file(const std::string& path);
void write_cpdag(std::ostream& out, const Cpdag& g);
void write_cpdag_file(const std::string& path, const Cpdag& g);

CiFile read_ci(std::istream& in);
CiFile read_ci_file(const std::string& path);
void write_ci(std::ostream& out, const CiFile& f);
void write_ci_file(const std::string& path, const CiFile& f);

ModelFile read_model(std::istream& in);
ModelFile read_model_file(const std::string& path);
void write_model(std::ostream& out, const ModelFile& f);
void write_model_file(const std::string& path, const ModelFile& f);

Dataset read_dataset(std::istream& in);
Dataset read_dataset_file(const std::string& path);
void write_dataset(std::ostream& out, const Dataset& d);
void write_dataset_file(const std::string& path, const Dataset& d);

} // namespace grasp
