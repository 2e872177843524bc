#include "shocklab/artifacts.hpp"

#include <sys/stat.h>

#include <cerrno>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <stdexcept>

namespace shocklab {

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& header)
    : out_(nullptr), ncols_(header.size()) {
    FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
    out_ = f;
    row(header);
}

CsvWriter::~CsvWriter() {
    if (out_) std::fclose(static_cast<FILE*>(out_));
}

std::string CsvWriter::quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string q = "\"";
    for (char c : field) {
        if (c == '"') q += '"';
        q += c;
    }
    q += '"';
    return q;
}

std::string CsvWriter::num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void CsvWriter::row(const std::vector<std::string>& fields) {
    if (fields.size() != ncols_)
        throw std::invalid_argument("csv row width does not match the header");
    FILE* f = static_cast<FILE*>(out_);
    for (size_t i = 0; i < fields.size(); ++i) {
        const std::string q = quote(fields[i]);
        std::fputs(q.c_str(), f);
        std::fputc(i + 1 == fields.size() ? '\n' : ',', f);
    }
}

void CsvWriter::row_numeric(const std::vector<double>& fields) {
    std::vector<std::string> s;
    s.reserve(fields.size());
    for (double v : fields) s.push_back(num(v));
    row(s);
}

void write_json(const std::string& path, nlohmann::json j, bool with_timestamp) {
    j["schema_version"] = 1;
    if (with_timestamp) {
        char buf[64];
        const std::time_t now = std::time(nullptr);
        std::tm tmv{};
        gmtime_r(&now, &tmv);
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tmv);
        j["generated_at"] = buf;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << j.dump(2) << "\n";
}

void ensure_dir(const std::string& path) {
    std::string acc;
    for (size_t i = 0; i <= path.size(); ++i) {
        if (i == path.size() || path[i] == '/') {
            if (!acc.empty() && acc != ".") {
                if (mkdir(acc.c_str(), 0755) != 0 && errno != EEXIST)
                    throw std::runtime_error("cannot create directory '" + acc + "'");
            }
            if (i < path.size()) acc += '/';
        } else {
            acc += path[i];
        }
    }
}

std::vector<std::vector<std::string>> read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    char c;
    while (in.get(c)) {
        if (quoted) {
            if (c == '"') {
                if (in.peek() == '"') {
                    field += '"';
                    in.get(c);
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            row.push_back(field);
            field.clear();
        } else if (c == '\n') {
            row.push_back(field);
            field.clear();
            rows.push_back(row);
            row.clear();
        } else if (c != '\r') {
            field += c;
        }
    }
    if (!field.empty() || !row.empty()) {
        row.push_back(field);
        rows.push_back(row);
    }
    return rows;
}

void emit_plot_script(const std::string& path, const std::string& csv_name,
                      const std::string& xlabel, const std::string& ylabel,
                      const std::string& title, int xcol, int ycol, bool logy) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << "#!/usr/bin/env python3\n"
        << "import csv, sys\n"
        << "import matplotlib\n"
        << "matplotlib.use('Agg')\n"
        << "import matplotlib.pyplot as plt\n\n"
        << "xs, ys = [], []\n"
        << "with open('" << csv_name << "') as f:\n"
        << "    for row in list(csv.reader(f))[1:]:\n"
        << "        xs.append(float(row[" << xcol << "]))\n"
        << "        ys.append(float(row[" << ycol << "]))\n"
        << "plt.plot(xs, ys, marker='o')\n"
        << "plt.xlabel('" << xlabel << "')\n"
        << "plt.ylabel('" << ylabel << "')\n";
    if (logy) out << "plt.yscale('log')\n";
    out << "plt.title('" << title << "')\n"
        << "plt.grid(True, alpha=0.3)\n"
        << "plt.savefig('" << csv_name << ".png', dpi=140)\n"
        << "print('wrote " << csv_name << ".png')\n";
}

}  // namespace shocklab
