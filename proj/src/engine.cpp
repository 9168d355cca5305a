#include "wavecast/engine.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wavecast {

std::string Trace::to_text() const {
  std::ostringstream out;
  for (const auto& e : events) {
    int a = std::min(e.from, e.to), b = std::max(e.from, e.to);
    out << e.round << ' ' << a << ' ' << b << ' ' << (e.from < e.to ? '>' : '<') << ' '
        << signal_name(e.signal) << '\n';
  }
  return out.str();
}

long Metrics::symbols_total() const {
  return std::accumulate(symbols_per_channel.begin(), symbols_per_channel.end(), 0L);
}

long Metrics::max_channel_load() const {
  if (symbols_per_channel.empty()) return 0;
  return *std::max_element(symbols_per_channel.begin(), symbols_per_channel.end());
}

std::string Metrics::to_text(int n) const {
  std::ostringstream out;
  out << "rounds_total " << rounds_total << '\n';
  out << "alphabet_used " << alphabet_used() << '\n';
  out << "bits_per_symbol " << bits_per_symbol() << '\n';
  out << "bit_rounds " << bit_rounds() << '\n';
  out << "symbols_total " << symbols_total() << '\n';
  out << "max_channel_load " << max_channel_load() << '\n';
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", n > 0 ? double(rounds_total) / n : 0.0);
  out << "rounds_per_n " << buf << '\n';
  return out.str();
}

Network::Network(const Graph& g, const PortMap& ports, bool record_trace)
    : g_(&g), ports_(&ports), record_trace_(record_trace) {
  base_.resize(g.n + 1, 0);
  for (int u = 0; u < g.n; ++u) base_[u + 1] = base_[u] + g.degree(u);
  cur_.assign(base_[g.n], kEmpty);
  nxt_.assign(base_[g.n], kEmpty);
  self_cur_.assign(g.n, kEmpty);
  self_nxt_.assign(g.n, kEmpty);
  metrics_.symbols_per_channel.assign(base_[g.n], 0);
}

std::pair<int, int> Network::channel_endpoints(int channel) const {
  int u = static_cast<int>(std::upper_bound(base_.begin(), base_.end(), channel) - base_.begin()) - 1;
  int port = channel - base_[u] + 1;
  return {u, ports_->neighbor(u, port)};
}

void Network::put(int from, int port, Signal s) {
  int to = ports_->neighbor(from, port);
  int back = ports_->back_port(from, port);
  std::uint8_t& slot = nxt_[base_[to] + back - 1];
  if (slot != kEmpty)
    fail(Errc::ChannelOverflow, "two signals on one port in round " + std::to_string(round_));
  slot = static_cast<std::uint8_t>(s);
  ++pending_;
  metrics_.symbols_per_channel[channel_id(from, port)]++;
  metrics_.alphabet_mask |= 1u << static_cast<int>(s);
  if (record_trace_) trace_.events.push_back({round_ + 1, from, to, s});
}

void Network::put_self(int vertex, Signal s) {
  std::uint8_t& slot = self_nxt_[vertex];
  if (slot != kEmpty)
    fail(Errc::ChannelOverflow, "two self signals in round " + std::to_string(round_));
  slot = static_cast<std::uint8_t>(s);
  ++pending_;
}

std::optional<Signal> VertexIo::received(int port) const {
  std::uint8_t v = net_->cur_[net_->base_[vertex_] + port - 1];
  if (v == Network::kEmpty) return std::nullopt;
  return static_cast<Signal>(v);
}

std::optional<Signal> VertexIo::received_self() const {
  std::uint8_t v = net_->self_cur_[vertex_];
  if (v == Network::kEmpty) return std::nullopt;
  return static_cast<Signal>(v);
}

void VertexIo::send(int port, Signal s) {
  if (port < 1 || port > degree_) fail(Errc::ProtocolViolation, "send on invalid port");
  net_->put(vertex_, port, s);
}

void VertexIo::send_self(Signal s) { net_->put_self(vertex_, s); }

void Network::advance_round(const std::function<void(int, VertexIo&)>& handler) {
  ++round_;
  cur_.swap(nxt_);
  std::fill(nxt_.begin(), nxt_.end(), kEmpty);
  self_cur_.swap(self_nxt_);
  std::fill(self_nxt_.begin(), self_nxt_.end(), kEmpty);
  pending_ = 0;
  VertexIo io;
  io.net_ = this;
  io.round_ = round_;
  for (int v = 0; v < g_->n; ++v) {
    io.vertex_ = v;
    io.degree_ = g_->degree(v);
    io.leader_ = (v == g_->leader);
    handler(v, io);
  }
  metrics_.rounds_total = round_ + 1;
}

}  // namespace wavecast
