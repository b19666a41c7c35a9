#include "streamrec/degseq.hpp"

#include <algorithm>
#include <sstream>

namespace streamrec {

std::vector<DegSeqItem> DegSeqInstance::stream_items() const {
  std::vector<DegSeqItem> items;
  items.reserve(degrees.size() + edges.size());
  for (std::uint64_t d : degrees) items.emplace_back(DegreeEntry{d});
  for (const Edge& e : edges) items.emplace_back(e);
  return items;
}

namespace {

std::string next_line(std::istringstream& in, std::size_t& line_no) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
  }
  throw MalformedStream("unexpected end of instance after line " + std::to_string(line_no));
}

std::uint64_t header_value(const std::string& line, const std::string& key, std::size_t line_no) {
  std::istringstream in(line);
  std::string k;
  long long v = -1;
  if (!(in >> k) || k != key || !(in >> v) || v < 0) {
    throw MalformedStream("line " + std::to_string(line_no) + ": expected '" + key + " <int>'");
  }
  return static_cast<std::uint64_t>(v);
}

}  // namespace

DegSeqInstance parse_degseq(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  DegSeqInstance inst;
  inst.n = header_value(next_line(in, line_no), "n:", line_no);

  {
    std::istringstream dl(next_line(in, line_no));
    std::string key;
    if (!(dl >> key) || key != "degrees:") {
      throw MalformedStream("line " + std::to_string(line_no) + ": expected 'degrees: ...'");
    }
    long long d;
    while (dl >> d) {
      if (d < 0) throw MalformedStream("negative degree on line " + std::to_string(line_no));
      inst.degrees.push_back(static_cast<std::uint64_t>(d));
    }
    if (!dl.eof()) throw MalformedStream("non-numeric degree on line " + std::to_string(line_no));
    if (inst.degrees.size() != inst.n) {
      throw MalformedStream("expected " + std::to_string(inst.n) + " degrees, found " +
                            std::to_string(inst.degrees.size()));
    }
  }

  const std::uint64_t m = header_value(next_line(in, line_no), "m:", line_no);
  for (std::uint64_t k = 0; k < m; ++k) {
    std::istringstream el(next_line(in, line_no));
    long long u = -1, v = -1;
    std::string extra;
    if (!(el >> u >> v) || u < 0 || v < 0 || (el >> extra)) {
      throw MalformedStream("line " + std::to_string(line_no) + ": expected 'u v'");
    }
    inst.edges.push_back({static_cast<std::uint64_t>(u), static_cast<std::uint64_t>(v)});
  }
  std::string rest;
  while (std::getline(in, rest)) {
    if (const auto hash = rest.find('#'); hash != std::string::npos) rest.resize(hash);
    if (rest.find_first_not_of(" \t\r") != std::string::npos) {
      throw MalformedStream("more edges than m = " + std::to_string(m));
    }
  }
  return inst;
}

std::string to_text(const DegSeqInstance& inst) {
  std::ostringstream out;
  out << "n: " << inst.n << "\ndegrees:";
  for (auto d : inst.degrees) out << ' ' << d;
  out << "\nm: " << inst.edges.size() << '\n';
  for (const Edge& e : inst.edges) out << e.from << ' ' << e.to << '\n';
  return out.str();
}

Decision degseq_randomized(std::uint64_t n, DegSeqStream& stream, const FieldContext& ctx,
                           SpaceMeter& meter) {
  // Field context, Sum, running power, item index, degree total, edge count.
  const MeterCharge charge(meter, FieldContext::kWords + 5);

  FieldElem sum = 0;
  FieldElem power = 1;
  std::uint64_t index = 0;
  std::uint64_t degree_total = 0;
  std::uint64_t edge_count = 0;
  std::optional<Decision> rejection;

  while (auto item = stream.next()) {
    ++index;
    if (const auto* d = std::get_if<DegreeEntry>(&*item)) {
      if (index > n) throw MalformedStream("degree entry after the n-th vertex");
      power = ctx.mul(power, ctx.alpha());
      sum = ctx.add(sum, ctx.mul(ctx.reduce(d->degree), power));
      degree_total += d->degree;
      continue;
    }
    if (index <= n) throw MalformedStream("edge before the last degree entry");
    const Edge& e = std::get<Edge>(*item);
    if (e.from < 1 || e.from > n || e.to < 1 || e.to > n) {
      if (!rejection) rejection = Decision::reject(RejectReason::vertex_out_of_range, index);
      continue;
    }
    sum = ctx.sub(sum, mod_pow(ctx.alpha(), e.from, ctx.modulus()));
    ++edge_count;
  }
  if (index < n) throw MalformedStream("stream ended before all degrees were read");
  if (rejection) return *rejection;
  if (degree_total != edge_count || sum != 0) {
    return Decision::reject(RejectReason::degree_mismatch, index);
  }
  return Decision::accept();
}

Decision degseq_multipass(std::uint64_t n, DegSeqStream& stream, std::size_t passes,
                          SpaceMeter& meter) {
  if (passes == 0) throw std::invalid_argument("pass count must be positive");
  const std::uint64_t window = n == 0 ? 0 : (n + passes - 1) / passes;
  // n, p, window, pass index, item index; plus the window itself.
  const MeterCharge counters(meter, 5);
  const MeterCharge window_charge(meter, window);
  std::vector<std::int64_t> remaining;
  remaining.reserve(window);

  for (std::size_t j = 0; j < passes; ++j) {
    if (j > 0) stream.rewind();
    const std::uint64_t lo = j * window;  // exclusive
    const std::uint64_t hi = std::min<std::uint64_t>((j + 1) * window, n);
    remaining.clear();
    std::uint64_t index = 0;
    while (auto item = stream.next()) {
      ++index;
      if (const auto* d = std::get_if<DegreeEntry>(&*item)) {
        if (index > n) throw MalformedStream("degree entry after the n-th vertex");
        if (index > lo && index <= hi) remaining.push_back(static_cast<std::int64_t>(d->degree));
        continue;
      }
      if (index <= n) throw MalformedStream("edge before the last degree entry");
      const Edge& e = std::get<Edge>(*item);
      if (e.from < 1 || e.from > n || e.to < 1 || e.to > n) {
        return Decision::reject(RejectReason::vertex_out_of_range, index);
      }
      if (e.from > lo && e.from <= hi) --remaining[e.from - lo - 1];
    }
    if (index < n) throw MalformedStream("stream ended before all degrees were read");
    for (std::uint64_t k = 0; k < remaining.size(); ++k) {
      if (remaining[k] != 0) return Decision::reject(RejectReason::degree_mismatch, lo + k + 1);
    }
  }
  return Decision::accept();
}

}  // namespace streamrec
