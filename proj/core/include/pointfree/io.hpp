#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "pointfree/attachment.hpp"
#include "pointfree/congruence.hpp"
#include "pointfree/frame.hpp"
#include "pointfree/order.hpp"

namespace pointfree {

/// `{"size": n, "covers": [[lo, hi], ...], "labels": [...] | {"i": "..."}}`.
/// Throws ParseError on malformed JSON and the frame errors on bad orders.
FrameRef parse_frame_json(std::string_view text);
FrameRef load_frame(const std::filesystem::path& path);
/// Covers of the frame plus its labels.
std::string frame_to_json(const FiniteFrame& f);

/// `{"source": path, "target": path, "map": [...]}`; paths resolve relative
/// to the hom file. Throws InvalidHom when the map is not a frame hom.
FrameHom load_hom(const std::filesystem::path& path);
FrameHom parse_hom_json(std::string_view text, const std::filesystem::path& base);

/// `{"flags": [indices], "body": "(0,1)u(2,3)"}`.
std::string lw_to_json(const LWElement& e);
LWElement parse_lw_json(const AttachmentSpec& spec, std::string_view text);

/// Hasse diagram, bottom at rank 0. With `overlay`, related pairs a ≠ b
/// are drawn as dashed edges a -> b.
std::string frame_dot(const FiniteFrame& f, const RelationTable* overlay = nullptr);
/// Hasse diagram of a set of congruences under containment.
std::string congruence_dot(std::span<const Congruence> congs);
/// The relation as a plain digraph over the frame's elements.
std::string relation_dot(const FiniteFrame& f, const RelationTable& r);
/// `{"kind": ..., "pairs": {"a": [b, ...]}}` adjacency lists.
std::string relation_to_json(const FiniteFrame& f, const RelationTable& r);

}  // namespace pointfree
