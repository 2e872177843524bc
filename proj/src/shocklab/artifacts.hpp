#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include <json.hpp>

namespace shocklab {

// CSV with an explicit header row and RFC-style quoting.
class CsvWriter {
  public:
    CsvWriter(const std::string& path, const std::vector<std::string>& header);
    ~CsvWriter();
    CsvWriter(const CsvWriter&) = delete;
    CsvWriter& operator=(const CsvWriter&) = delete;

    void row(const std::vector<std::string>& fields);
    void row_numeric(const std::vector<double>& fields);

    static std::string quote(const std::string& field);
    static std::string num(double v);

  private:
    void* out_;  // FILE*
    size_t ncols_;
};

// JSON report with a schema-version field; keys are emitted sorted, floats
// shortest-roundtrip, so identical inputs give byte-identical files.
void write_json(const std::string& path, nlohmann::json j, bool with_timestamp = true);

void ensure_dir(const std::string& path);

// Plain-text python script plotting columns of an emitted CSV.
void emit_plot_script(const std::string& path, const std::string& csv_name,
                      const std::string& xlabel, const std::string& ylabel,
                      const std::string& title, int xcol, int ycol, bool logy);

// RFC-style CSV reader (quotes, escaped quotes, embedded separators).
std::vector<std::vector<std::string>> read_csv(const std::string& path);

}  // namespace shocklab
