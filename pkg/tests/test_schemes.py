import pytest

from editpack import (
    ConfigError,
    DiscardReason,
    EditString,
    ParseFailure,
    PhrasePairEdit,
    Scheme,
    SchemeConfig,
    SpanEdit,
    TargetEdit,
    align,
    compress,
    dilate_and_merge,
    expand,
    extract_edit_script,
    parse_edit_string,
    tokenize,
)
from synthdata import (
    GOLDEN_PHRASE_PAIR,
    GOLDEN_SOURCE,
    GOLDEN_SPAN,
    GOLDEN_TARGET,
    GOLDEN_TARGET_ONLY,
    small_vocab_pairs,
    unique_token_pairs,
)

SPAN = SchemeConfig(Scheme.SPAN)
PP1 = SchemeConfig(Scheme.PHRASE_PAIR, dilation_k=1)
TO1 = SchemeConfig(Scheme.TARGET_ONLY, dilation_k=1)


def script_for(x, y):
    return extract_edit_script(x, y, align(x, y))


class TestSchemeConfig:
    def test_target_only_requires_anchors(self):
        with pytest.raises(ConfigError):
            SchemeConfig(Scheme.TARGET_ONLY, dilation_k=0)

    def test_negative_dilation_rejected(self):
        with pytest.raises(ConfigError):
            SchemeConfig(Scheme.SPAN, dilation_k=-1)

    def test_empty_separator_rejected(self):
        with pytest.raises(ConfigError):
            SchemeConfig(Scheme.SPAN, edit_sep="")

    def test_strict_mode_uses_reserved_separators(self):
        cfg = SchemeConfig.strict_mode(Scheme.PHRASE_PAIR, dilation_k=2)
        assert cfg.field_sep == "\t"
        assert cfg.edit_sep == ""
        assert cfg.strict


class TestDilateAndMerge:
    def test_golden_pair_k1(self):
        x, y = tokenize(GOLDEN_SOURCE), tokenize(GOLDEN_TARGET)
        dilated = dilate_and_merge(x, y, script_for(x, y), k=1)
        assert [x[d.src_lo:d.src_hi] for d in dilated] == [
            ["not", "to"],
            ["time", "have", "been"],
        ]
        assert [y[d.tgt_lo:d.tgt_hi] for d in dilated] == [
            ["not", "need", "to"],
            ["time", "has", "been"],
        ]
        assert [(d.left_anchor, d.right_anchor) for d in dilated] == [(1, 1), (1, 1)]

    def test_k0_is_identity_on_spans(self):
        x = ["a", "b", "c", "d"]
        y = ["a", "X", "c", "d"]
        dilated = dilate_and_merge(x, y, script_for(x, y), k=0)
        assert [(d.src_lo, d.src_hi, d.left_anchor, d.right_anchor) for d in dilated] == [
            (1, 2, 0, 0)
        ]

    def test_close_edits_merge(self):
        x = ["a", "b", "c", "d", "e"]
        y = ["a", "X", "c", "Y", "e"]
        dilated = dilate_and_merge(x, y, script_for(x, y), k=1)
        assert len(dilated) == 1
        d = dilated[0]
        assert x[d.src_lo:d.src_hi] == ["a", "b", "c", "d", "e"]
        assert y[d.tgt_lo:d.tgt_hi] == ["a", "X", "c", "Y", "e"]

    def test_edits_two_k_apart_stay_separate(self):
        x = ["a", "b", "c", "d", "e", "f"]
        y = ["a", "X", "c", "d", "Y", "f"]
        dilated = dilate_and_merge(x, y, script_for(x, y), k=1)
        assert len(dilated) == 2

    def test_boundary_clamping_records_anchor_lengths(self):
        x = ["a", "b", "c", "d", "e", "f", "g"]
        y = ["X", "b", "c", "d", "e", "f", "Z"]
        dilated = dilate_and_merge(x, y, script_for(x, y), k=2)
        assert [(d.left_anchor, d.right_anchor) for d in dilated] == [(0, 2), (2, 0)]


class TestCompress:
    def test_golden_span(self):
        x, y = tokenize(GOLDEN_SOURCE), tokenize(GOLDEN_TARGET)
        assert compress(x, y, SPAN).text == GOLDEN_SPAN

    def test_golden_phrase_pair(self):
        x, y = tokenize(GOLDEN_SOURCE), tokenize(GOLDEN_TARGET)
        assert compress(x, y, PP1).text == GOLDEN_PHRASE_PAIR

    def test_golden_target_only(self):
        x, y = tokenize(GOLDEN_SOURCE), tokenize(GOLDEN_TARGET)
        assert compress(x, y, TO1).text == GOLDEN_TARGET_ONLY

    @pytest.mark.parametrize("cfg", [SPAN, PP1, TO1])
    def test_identity_pair_compresses_to_empty(self, cfg):
        x = tokenize("nothing changes here")
        assert compress(x, x, cfg).text == ""

    def test_pure_deletion_span(self):
        x = ["keep", "drop", "keep2"]
        y = ["keep", "keep2"]
        assert compress(x, y, SPAN).text == "1 2"


class TestParse:
    def test_golden_span(self):
        parsed = parse_edit_string(EditString(GOLDEN_SPAN, SPAN))
        assert parsed == [SpanEdit(4, 4, ("need",)), SpanEdit(16, 17, ("has",))]

    def test_golden_phrase_pair(self):
        parsed = parse_edit_string(EditString(GOLDEN_PHRASE_PAIR, PP1))
        assert parsed == [
            PhrasePairEdit(("not", "to"), ("not", "need", "to")),
            PhrasePairEdit(("time", "have", "been"), ("time", "has", "been")),
        ]

    def test_golden_target_only(self):
        parsed = parse_edit_string(EditString(GOLDEN_TARGET_ONLY, TO1))
        assert parsed == [
            TargetEdit(("not", "need", "to")),
            TargetEdit(("time", "has", "been")),
        ]

    @pytest.mark.parametrize("cfg", [SPAN, PP1, TO1])
    def test_empty_string(self, cfg):
        assert parse_edit_string(EditString("", cfg)) == []
        assert parse_edit_string(EditString("   ", cfg)) == []

    def test_span_tolerates_stray_separators(self):
        parsed = parse_edit_string(EditString(", 4 4 need, 16 17 has, ", SPAN))
        assert parsed == [SpanEdit(4, 4, ("need",)), SpanEdit(16, 17, ("has",))]

    def test_span_phrase_may_contain_separator_lookalikes(self):
        # "need," is one token; the separator only counts before INT INT.
        parsed = parse_edit_string(EditString("4 4 need,, 16 17 has", SPAN))
        assert parsed == [SpanEdit(4, 4, ("need,",)), SpanEdit(16, 17, ("has",))]

    def test_span_bad_integer_is_parse_failure(self):
        parsed = parse_edit_string(EditString("x 4 need", SPAN))
        assert parsed == [ParseFailure("x 4 need", "span indices are not integers")]

    def test_span_short_edit_is_parse_failure(self):
        parsed = parse_edit_string(EditString("4", SPAN))
        assert isinstance(parsed[0], ParseFailure)

    def test_phrase_pair_missing_field_sep(self):
        parsed = parse_edit_string(EditString("rewrite: no separator here", PP1))
        assert isinstance(parsed[0], ParseFailure)

    def test_text_before_marker_is_parse_failure(self):
        parsed = parse_edit_string(EditString("garbage rewrite: time has been", TO1))
        assert isinstance(parsed[0], ParseFailure)
        assert parsed[1] == TargetEdit(("time", "has", "been"))

    def test_phrase_pair_empty_target_phrase(self):
        parsed = parse_edit_string(EditString("rewrite: the cat, ", PP1))
        assert parsed == [PhrasePairEdit(("the", "cat"), ())]

    def test_strict_mode_handles_commas_in_phrases(self):
        cfg = SchemeConfig.strict_mode(Scheme.PHRASE_PAIR, dilation_k=1)
        x = tokenize("fee , enormous time have been saved")
        y = tokenize("fee , enormous time has been saved")
        s = compress(x, y, cfg)
        assert expand(x, s).output == y

    def test_default_mode_comma_token_roundtrip(self):
        # A comma token strictly inside a phrase still parses in default
        # mode because it is space-separated, unlike the edit separator.
        x = tokenize("a b enormous , fee c")
        y = tokenize("a b gigantic , fee c")
        s = compress(x, y, PP1)
        assert s.text == "rewrite: b enormous ,, b gigantic ,"
        assert expand(x, s).output == y


class TestExpandSpan:
    def test_golden(self):
        x = tokenize(GOLDEN_SOURCE)
        outcome = expand(x, EditString(GOLDEN_SPAN, SPAN))
        assert outcome.output == tokenize(GOLDEN_TARGET)
        assert outcome.applied_count == 2
        assert outcome.discarded_count == 0

    def test_empty_string_is_identity(self):
        x = ["a", "b"]
        outcome = expand(x, EditString("", SPAN))
        assert outcome.output == x
        assert outcome.applied_count == 0

    def test_out_of_bounds_discarded(self):
        x = ["a", "b"]
        outcome = expand(x, EditString("5 6 X", SPAN))
        assert outcome.output == x
        assert outcome.discard_reasons == [(0, DiscardReason.SPAN_OUT_OF_BOUNDS)]

    def test_negative_span_discarded(self):
        x = ["a", "b"]
        outcome = expand(x, EditString("-1 1 X", SPAN))
        assert outcome.discard_reasons == [(0, DiscardReason.SPAN_OUT_OF_BOUNDS)]

    def test_overlap_discarded_but_rest_applied(self):
        x = ["a", "b", "c", "d"]
        outcome = expand(x, EditString("0 2 X, 1 3 Y, 3 4 Z", SPAN))
        assert outcome.output == ["X", "c", "Z"]
        assert outcome.applied_count == 2
        assert outcome.discard_reasons == [(1, DiscardReason.OVERLAP)]

    def test_parse_failure_recorded_and_rest_applied(self):
        x = ["a", "b", "c"]
        outcome = expand(x, EditString("junk, 1 2 X", SPAN))
        assert outcome.output == ["a", "X", "c"]
        assert outcome.discard_reasons == [(0, DiscardReason.PARSE_ERROR)]

    def test_off_by_one_span_changes_the_wrong_word(self):
        # Shift the second golden span left by one and the substitution
        # lands on "time" instead of "have".
        x = tokenize(GOLDEN_SOURCE)
        outcome = expand(x, EditString("4 4 need, 15 16 has", SPAN))
        assert outcome.discarded_count == 0
        assert outcome.output == tokenize(
            "Since we do not need to bring cash to pay for the transportation fee , "
            "enormous has have been saved"
        )
        assert outcome.output != tokenize(GOLDEN_TARGET)


class TestExpandPhrasePair:
    def test_golden(self):
        x = tokenize(GOLDEN_SOURCE)
        outcome = expand(x, EditString(GOLDEN_PHRASE_PAIR, PP1))
        assert outcome.output == tokenize(GOLDEN_TARGET)
        assert outcome.applied_count == 2

    def test_missing_source_phrase_discarded(self):
        x = ["a", "b", "c"]
        outcome = expand(x, EditString("rewrite: z q, z w", PP1))
        assert outcome.output == x
        assert outcome.discard_reasons == [(0, DiscardReason.ANCHOR_NOT_FOUND)]

    def test_leftmost_occurrence_wins(self):
        x = ["a", "b", "z", "a", "b"]
        outcome = expand(x, EditString("rewrite: a b, a X b", PP1))
        assert outcome.output == ["a", "X", "b", "z", "a", "b"]

    def test_cursor_advances_past_replacement(self):
        x = ["a", "b", "z", "a", "b"]
        s = "rewrite: a b, a X b, rewrite: a b, a Y b"
        outcome = expand(x, EditString(s, PP1))
        assert outcome.output == ["a", "X", "b", "z", "a", "Y", "b"]
        assert outcome.applied_count == 2

    def test_pure_deletion_of_everything(self):
        x = ["the", "cat"]
        s = compress(x, [], PP1)
        assert s.text == "rewrite: the cat, "
        outcome = expand(x, s)
        assert outcome.output == []

    def test_insertion_into_empty_source(self):
        s = compress([], ["brand", "new"], PP1)
        outcome = expand([], s)
        assert outcome.output == ["brand", "new"]


class TestExpandTargetOnly:
    def test_golden(self):
        x = tokenize(GOLDEN_SOURCE)
        outcome = expand(x, EditString(GOLDEN_TARGET_ONLY, TO1))
        assert outcome.output == tokenize(GOLDEN_TARGET)
        assert outcome.applied_count == 2

    def test_leftmost_then_closest_tie_break(self):
        x = ["a", "b", "a", "b"]
        outcome = expand(x, EditString("rewrite: a X b", TO1))
        assert outcome.output == ["a", "X", "b", "a", "b"]

    def test_anchor_not_found_discards(self):
        x = ["a", "b", "c"]
        outcome = expand(x, EditString("rewrite: q X r", TO1))
        assert outcome.output == x
        assert outcome.discard_reasons == [(0, DiscardReason.ANCHOR_NOT_FOUND)]

    def test_anchors_clamped_at_start_roundtrip(self):
        # Edit one position from the start: left anchor shorter than k.
        x = ["a", "b", "c", "d", "e"]
        y = ["a", "X", "c", "d", "e"]
        cfg = SchemeConfig(Scheme.TARGET_ONLY, dilation_k=3)
        assert expand(x, compress(x, y, cfg)).output == y

    def test_anchors_clamped_at_end_roundtrip(self):
        x = ["a", "b", "c", "d", "e"]
        y = ["a", "b", "c", "X", "e"]
        cfg = SchemeConfig(Scheme.TARGET_ONLY, dilation_k=3)
        assert expand(x, compress(x, y, cfg)).output == y

    def test_edit_at_position_zero_is_discarded(self):
        # No left context exists, so the mandatory left anchor cannot
        # match and the edit is dropped rather than misapplied.
        x = ["a", "b", "c"]
        y = ["X", "b", "c"]
        outcome = expand(x, compress(x, y, TO1))
        assert outcome.output == x
        assert outcome.discard_reasons == [(0, DiscardReason.ANCHOR_NOT_FOUND)]

    def test_edit_at_final_position_is_discarded(self):
        x = ["a", "b", "c"]
        y = ["a", "b", "X"]
        outcome = expand(x, compress(x, y, TO1))
        assert outcome.output == x
        assert outcome.discarded_count == 1

    def test_middle_deletion_roundtrip(self):
        x = ["a", "b", "c", "d", "e"]
        y = ["a", "b", "d", "e"]
        outcome = expand(x, compress(x, y, TO1))
        assert outcome.output == y

    def test_cursor_prevents_reordering(self):
        # Both edits anchor on "b"; the second search starts after the
        # first replacement, so the later occurrence is used.
        x = ["a", "b", "c", "z", "b", "c"]
        s = "rewrite: b X c, rewrite: b Y c"
        outcome = expand(x, EditString(s, TO1))
        assert outcome.output == ["a", "b", "X", "c", "z", "b", "Y", "c"]

    def test_empty_phrase_discarded(self):
        outcome = expand(["a"], EditString("rewrite:", TO1))
        assert outcome.output == ["a"]
        assert outcome.discard_reasons == [(0, DiscardReason.ANCHOR_NOT_FOUND)]


class TestRoundtripProperties:
    @pytest.mark.parametrize("cfg", [SPAN, PP1])
    def test_unique_token_roundtrip(self, cfg):
        for x, y in unique_token_pairs(150, seed=31):
            outcome = expand(x, compress(x, y, cfg))
            if outcome.discarded_count == 0:
                assert outcome.output == y, (x, y, cfg.scheme)

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_target_only_roundtrip_away_from_boundaries(self, k):
        # With full anchor context on both sides and unambiguous tokens,
        # target-only expansion must be exact, with nothing discarded.
        cfg = SchemeConfig(Scheme.TARGET_ONLY, dilation_k=k)
        for x, y in unique_token_pairs(150, seed=31, margin=k):
            outcome = expand(x, compress(x, y, cfg))
            assert outcome.discarded_count == 0, (x, y, k)
            assert outcome.output == y, (x, y, k)

    def test_span_is_exact_even_on_ambiguous_corpora(self):
        for x, y in small_vocab_pairs(150, seed=37):
            outcome = expand(x, compress(x, y, SPAN))
            assert outcome.discarded_count == 0
            assert outcome.output == y

    @pytest.mark.parametrize(
        "cfg",
        [
            SPAN,
            PP1,
            SchemeConfig(Scheme.TARGET_ONLY, dilation_k=1),
        ],
    )
    def test_high_overlap_pairs_compress_below_target_length(self, cfg):
        for x, y in unique_token_pairs(200, seed=41):
            if len(y) < 15:
                continue
            distance = align(x, y).cost
            if distance == 0 or distance > 2:
                continue
            edit_tokens = len(tokenize(compress(x, y, cfg).text))
            assert edit_tokens < len(y), (x, y, cfg.scheme)

    def test_applied_edits_never_reorder_source(self):
        # Surviving source tokens appear in their original order.
        for x, y in unique_token_pairs(100, seed=43):
            for cfg in (PP1, TO1):
                outcome = expand(x, compress(x, y, cfg))
                kept = [t for t in outcome.output if t in set(x)]
                positions = [x.index(t) for t in kept]
                assert positions == sorted(positions)
