#pragma once

#include <filesystem>
#include <vector>

#include "nobelnet/construct.hpp"
#include "nobelnet/core.hpp"

namespace nobelnet::io {

/// Reads a dataset from two CSV files.
///
/// nodes.csv columns: id,name,gender,laureate,prize_year,candidate,
///                    degree_year,degree_institution,sources
/// edges.csv columns: advisor_id,student_id,kind,source
///
/// Booleans are 0/1, optional fields are empty when absent, and `sources`
/// is a ';'-joined list. Headers are mandatory and checked verbatim.
/// Schema violations throw DatasetError with file:line subjects; this
/// function does not run semantic validation — call validate() after.
Dataset load_dataset(const std::filesystem::path& nodes_csv,
                     const std::filesystem::path& edges_csv);

/// Convenience for the standard layout `dir/nodes.csv` + `dir/edges.csv`.
Dataset load_dataset_dir(const std::filesystem::path& dir);

/// Writes the two CSV files in the same schema load_dataset() reads.
/// Output is canonical: rows in dataset order, fields quoted only when
/// required, '\n' line endings.
void save_dataset(const Dataset& ds, const std::filesystem::path& nodes_csv,
                  const std::filesystem::path& edges_csv);

void save_dataset_dir(const Dataset& ds, const std::filesystem::path& dir);

/// cohorts.csv columns: year,laureate_id. Multiple rows per year keep file
/// order within the year.
Cohorts load_cohorts(const std::filesystem::path& file);

/// overlay.csv columns: action,advisor_id,student_id,kind with action one of
/// add_edge, remove_edge, add_person. For add_person the advisor_id column
/// carries the new person's id and the remaining columns must be empty; the
/// person is created non-laureate with defaults.
std::vector<OverlayEdit> load_overlay(const std::filesystem::path& file);

}  // namespace nobelnet::io
