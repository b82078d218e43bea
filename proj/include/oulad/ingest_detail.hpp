#pragma once

#include "oulad/csv.hpp"
#include "oulad/tables.hpp"

namespace oulad::detail {

// Header-driven typed binding of the seven parsed CSVs. Shared by the
// directory loader and the bundled sample.
RawTables bind_tables(const CsvTable& courses,
                      const CsvTable& assessments,
                      const CsvTable& vle,
                      const CsvTable& student_info,
                      const CsvTable& student_registration,
                      const CsvTable& student_assessment,
                      const CsvTable& student_vle);

// Raw CSV text of the bundled sample, keyed by position in oulad_file_names().
// Defined in sample_data.cpp.
extern const char* const kSampleCsv[7];

}  // namespace oulad::detail
