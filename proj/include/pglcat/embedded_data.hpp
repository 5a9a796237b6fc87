#pragma once

// String constants generated from the files under data/ (see
// cmake/EmbedData.cmake); the files remain the source of truth.
namespace pglcat::embedded {

extern const char* const tables_pgl2_csv;
extern const char* const tables_pgl3_csv;
extern const char* const tables_pgl4_csv;
extern const char* const tables_pgl5_csv;
extern const char* const tables_pgl6_csv;
extern const char* const tables_pgl7_csv;
extern const char* const tables_status_csv;
extern const char* const lowdeg_tz_exceptions_csv;
extern const char* const chartab_a4_ctab;
extern const char* const chartab_a5_ctab;
extern const char* const chartab_s4_ctab;
extern const char* const chartab_psl27_ctab;
extern const char* const chartab_a4_in_a5_fus;
extern const char* const chartab_s4_in_psl27_fus;
extern const char* const data_cli_schema_json;

}  // namespace pglcat::embedded
