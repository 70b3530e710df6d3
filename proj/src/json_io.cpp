#include "ckb/json_io.hpp"

#include <sstream>

namespace ckb {

ordered_json laurent_to_json(const LaurentPoly& p) {
  ordered_json obj = ordered_json::object();
  p.for_each_term([&](long j, const Int& c) {
    obj[std::to_string(j)] = c.get_str();
  });
  return obj;
}

LaurentPoly laurent_from_json(const ordered_json& j) {
  LaurentPoly p;
  for (auto it = j.begin(); it != j.end(); ++it)
    p.set_coeff(std::stol(it.key()), parse_int(it.value().get<std::string>()));
  return p;
}

ordered_json weight_table_to_json(const WeightTable& table) {
  ordered_json out;
  out["d"] = table.d;
  out["method"] = method_name(table.method);
  ordered_json arr = ordered_json::array();
  for (int n = 0; n <= table.max_n(); ++n) {
    ordered_json entry;
    entry["n"] = n;
    entry["coeffs"] = laurent_to_json(table.w[static_cast<size_t>(n)]);
    arr.push_back(entry);
  }
  out["w"] = arr;
  return out;
}

WeightTable weight_table_from_json(const ordered_json& j) {
  WeightTable table;
  table.d = j.at("d").get<int>();
  table.method = parse_method(j.at("method").get<std::string>());
  for (const auto& entry : j.at("w"))
    table.w.push_back(laurent_from_json(entry.at("coeffs")));
  return table;
}

std::string laurent_to_csv(const LaurentPoly& p) {
  std::ostringstream os;
  os << "exponent,coefficient\n";
  p.for_each_term([&](long j, const Int& c) { os << j << "," << c.get_str() << "\n"; });
  return os.str();
}

std::string array_to_csv(const ArrayA& array) {
  std::ostringstream os;
  for (const auto& row : array.rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) os << ",";
      os << row[c].get_str();
    }
    os << "\n";
  }
  return os.str();
}

ordered_json array_to_json(const ArrayA& array) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : array.rows) {
    ordered_json r = ordered_json::array();
    for (const auto& v : row) r.push_back(v.get_str());
    rows.push_back(r);
  }
  return rows;
}

ordered_json series_to_json(const SeriesX& s) {
  ordered_json arr = ordered_json::array();
  for (int m = 0; m <= s.order(); ++m) {
    ordered_json entry;
    entry["m"] = m;
    entry["coeffs"] = laurent_to_json(s[m]);
    arr.push_back(entry);
  }
  return arr;
}

namespace {
ordered_json multipoly_to_json(const MultiPoly& p, const std::vector<std::string>& names) {
  ordered_json terms = ordered_json::array();
  for (const auto& [m, c] : p.terms()) {
    ordered_json term;
    ordered_json mono = ordered_json::object();
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) mono[names[i]] = m[i];
    term["monomial"] = mono;
    term["coeff"] = c.get_str();
    terms.push_back(term);
  }
  return terms;
}
}  // namespace

ordered_json certificate_to_json(const CertificateData& data) {
  const auto names = data.sys.vars.names();
  auto deriv_name = [&](const DerivKey& k) {
    if (k.first == 0 && k.second == 0) return std::string("P");
    return "P_" + std::string(static_cast<size_t>(k.first), 't') +
           std::string(static_cast<size_t>(k.second), 'x');
  };
  ordered_json out;
  out["d"] = data.sys.d;
  out["N"] = data.q.N;
  out["P"] = multipoly_to_json(data.sys.P, names);
  out["K"] = multipoly_to_json(data.sys.K, names);
  for (const auto& [tilde, elim, quot] :
       {std::make_tuple(false, &data.q, &data.quotient_q),
        std::make_tuple(true, &data.qt, &data.quotient_qt)}) {
    ordered_json side;
    side["Q0"] = multipoly_to_json(elim->Q0, names);
    side["quotient_by_P"] = multipoly_to_json(*quot, names);
    ordered_json cofs = ordered_json::object();
    for (const auto& [key, c] : elim->cofactors)
      cofs[deriv_name(key)] = multipoly_to_json(c, names);
    side["cofactors"] = cofs;
    out[tilde ? "Qt" : "Q"] = side;
  }
  return out;
}

}  // namespace ckb
