#include "monometric/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "monometric/error.hpp"

namespace monometric::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

double number_at(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number())
    malformed(std::string("expected numeric field \"") + key + "\"");
  return j.at(key).get<double>();
}

std::vector<double> number_array(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array())
    malformed(std::string("expected array field \"") + key + "\"");
  std::vector<double> out;
  for (const auto& item : j.at(key)) {
    if (!item.is_number()) malformed(std::string("non-numeric entry in \"") + key + "\"");
    out.push_back(item.get<double>());
  }
  return out;
}

std::string kind_of(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    malformed("expected an object with a string \"kind\"");
  return j.at("kind").get<std::string>();
}

bool is_auto(const json& j, const char* key) {
  return !j.contains(key) || (j.at(key).is_string() && j.at(key).get<std::string>() == "auto");
}

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  malformed("matrix entries must be [re, im] pairs");
}

}  // namespace

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.15g", value);
  std::string out(buffer);
  if (out.find_first_of(".e") == std::string::npos) out += ".0";
  return out;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    malformed(path.string() + ": " + e.what());
  }
}

WeightFunction weight_from_json(const json& j) {
  if (!j.is_object()) malformed("weight must be an object");
  try {
    return WeightFunction(number_array(j, "breakpoints"), number_array(j, "values"));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    malformed(e.what());
  }
}

json to_json(const WeightFunction& h) {
  return json{{"breakpoints", std::vector<double>(h.breakpoints().begin(), h.breakpoints().end())},
              {"values", std::vector<double>(h.values().begin(), h.values().end())}};
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) malformed("matrix must be a non-empty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) malformed("matrix rows must be non-empty arrays");
  const std::size_t cols = j[0].size();
  std::vector<Complex> entries;
  entries.reserve(rows * cols);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) malformed("matrix rows must have equal length");
    for (const auto& entry : row) entries.push_back(complex_from_json(entry));
  }
  return ComplexMatrix(rows, cols, std::move(entries));
}

json to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

KrausChannel channel_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kraus") || !j.at("kraus").is_array())
    malformed("channel must be an object with a \"kraus\" array");
  std::vector<ComplexMatrix> ops;
  for (const auto& m : j.at("kraus")) ops.push_back(matrix_from_json(m));
  return KrausChannel(std::move(ops));
}

json to_json(const KrausChannel& channel) {
  json ops = json::array();
  for (const auto& k : channel.operators()) ops.push_back(to_json(k));
  return json{{"kraus", std::move(ops)}};
}

MonotoneFunction monotone_from_json(const json& j, const QuadratureConfig& quad) {
  const std::string kind = kind_of(j);
  try {
    if (kind == "gamma") return MonotoneFunction::gamma(number_at(j, "gamma"));
    if (kind == "min") return MonotoneFunction::min();
    if (kind == "max") return MonotoneFunction::max();
    if (kind == "sqrt") return MonotoneFunction::sqrt();
    if (kind == "identity") return MonotoneFunction::identity();
    if (kind == "one") return MonotoneFunction::constant_one();
    if (kind == "canonical") {
      if (!j.contains("h")) malformed("canonical function needs \"h\"");
      WeightFunction h = weight_from_json(j.at("h"));
      if (is_auto(j, "beta")) return MonotoneFunction::normalized_canonical(std::move(h), quad);
      return MonotoneFunction::canonical(number_at(j, "beta"), std::move(h), quad);
    }
    if (kind == "kubo_ando") {
      if (!j.contains("atoms") || !j.at("atoms").is_array()) malformed("kubo_ando needs \"atoms\"");
      std::vector<KuboAndoAtom> atoms;
      for (const auto& a : j.at("atoms")) {
        if (!a.is_object() || !a.contains("s")) malformed("atom needs \"s\" and \"w\"");
        const json& s = a.at("s");
        double position;
        if (s.is_string() && s.get<std::string>() == "inf") {
          position = std::numeric_limits<double>::infinity();
        } else if (s.is_number()) {
          position = s.get<double>();
        } else {
          malformed("atom position must be a number or \"inf\"");
        }
        atoms.push_back({position, number_at(a, "w")});
      }
      return MonotoneFunction::kubo_ando(std::move(atoms));
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::QuadratureFailure || e.kind() == ErrorKind::ParseError) throw;
    malformed(e.what());
  }
  malformed("unknown monotone function kind \"" + kind + "\"");
}

MCFunction mc_from_json(const json& j, const QuadratureConfig& quad) {
  const std::string kind = kind_of(j);
  try {
    if (kind == "bridge") return MCFunction::bridge(number_at(j, "gamma"));
    if (kind == "canonical") {
      if (!j.contains("h")) malformed("canonical MC function needs \"h\"");
      WeightFunction h = weight_from_json(j.at("h"));
      if (is_auto(j, "c0")) return MCFunction::normalized_canonical(std::move(h), quad);
      return MCFunction::canonical(number_at(j, "c0"), std::move(h), quad);
    }
    if (kind == "from_f") {
      if (!j.contains("f")) malformed("from_f needs \"f\"");
      return MCFunction::from_monotone(monotone_from_json(j.at("f"), quad));
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::QuadratureFailure || e.kind() == ErrorKind::ParseError) throw;
    malformed(e.what());
  }
  malformed("unknown Morozova-Chentsov kind \"" + kind + "\"");
}

}  // namespace monometric::io
