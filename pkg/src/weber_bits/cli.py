"""Command-line front end.

One subcommand per core operation, machine-readable output (JSON lines
or CSV with 17-significant-digit floats, round-trip exact for doubles),
and config-file defaults for thresholds and gain.

Exit codes: 0 success, 1 usage error, 2 validation error (sub-threshold,
out-of-range, unit mismatch), 3 I/O or format error (unreadable config,
unsupported or corrupt WAV).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import audio, core, info, scales, sound
from .errors import DecodeError, ValidationError

CONFIG_ENV_VAR = "WEBER_BITS_CONFIG"
CONFIG_KEYS = ("freq_threshold", "amp_threshold", "gain")

EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_IO = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the contract here is 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


class ConfigError(Exception):
    pass


def load_config(path: str) -> dict[str, float]:
    """Parse `key = value` lines; `#` starts a comment; blank lines ignored."""
    values: dict[str, float] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {line!r}")
            key, _, val = line.partition("=")
            key = key.strip()
            if key not in CONFIG_KEYS:
                raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
            try:
                values[key] = float(val.strip())
            except ValueError:
                raise ConfigError(f"{path}:{lineno}: {val.strip()!r} is not a number")
    return values


# ---------------------------------------------------------------------------
# Output records


def _fmt_num(v) -> str:
    return format(float(v), ".17g")


def _json_token(v) -> str:
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, str):
        return json.dumps(v)
    return _fmt_num(v)


def record_to_json(rec: dict) -> str:
    inputs = ", ".join(f"{json.dumps(k)}: {_json_token(v)}" for k, v in rec["inputs"].items())
    return (
        f'{{"op": {json.dumps(rec["op"])}, "inputs": {{{inputs}}}, '
        f'"value": {_json_token(rec["value"])}, "unit": {json.dumps(rec["unit"])}, '
        f'"below_threshold": {_json_token(rec["below_threshold"])}}}'
    )


def _csv_token(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, str):
        return v
    return _fmt_num(v)


def emit(records: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        for rec in records:
            print(record_to_json(rec), file=out)
    elif fmt == "csv":
        header = ["op", *records[0]["inputs"].keys(), "value", "unit", "below_threshold"]
        print(",".join(header), file=out)
        for rec in records:
            row = [rec["op"], *rec["inputs"].values(), rec["value"], rec["unit"],
                   rec["below_threshold"]]
            print(",".join(_csv_token(v) for v in row), file=out)
    else:
        for rec in records:
            args = ", ".join(f"{k}={_csv_token(v)}" for k, v in rec["inputs"].items())
            if rec["value"] is None:
                print(f"{rec['op']}({args}) -> below threshold", file=out)
            else:
                flag = "  [below threshold, clamped]" if rec["below_threshold"] else ""
                print(f"{rec['op']}({args}) = {_csv_token(rec['value'])} "
                      f"{rec['unit']}{flag}", file=out)


def _record(op, inputs, value, unit, below_threshold=False) -> dict:
    return {"op": op, "inputs": inputs, "value": value, "unit": unit,
            "below_threshold": below_threshold}


# ---------------------------------------------------------------------------
# Subcommand handlers. Each returns a list of output records.


def _resolve(args, cfg, flag, key, fallback=None):
    val = getattr(args, flag, None)
    if val is not None:
        return val
    if key in cfg:
        return cfg[key]
    return fallback


def _require_thresholds(args, cfg, parser):
    f0 = _resolve(args, cfg, "freq_threshold", "freq_threshold")
    a0 = _resolve(args, cfg, "amp_threshold", "amp_threshold")
    if f0 is None or a0 is None:
        parser.error("--freq-threshold and --amp-threshold are required "
                     "(flags or config file); there are no default thresholds")
    return sound.PerceptionThresholds(f0, a0)


def _wave(args) -> sound.SoundWave:
    return sound.SoundWave(args.freq, args.amp)


def cmd_perceive(args, cfg, parser):
    gain = core.Gain(_resolve(args, cfg, "gain", "gain", 1.0))
    inputs = {"stimulus": args.stimulus, "threshold": args.threshold, "gain": gain.K}
    stim = core.Stimulus(args.stimulus, args.threshold)
    if args.clamp and args.stimulus < args.threshold:
        return [_record("perceive", inputs, 0.0, core.BITS, below_threshold=True)]
    return [_record("perceive", inputs, core.perceive(stim, gain).value, core.BITS)]


def cmd_perceive_inverse(args, cfg, parser):
    gain = core.Gain(_resolve(args, cfg, "gain", "gain", 1.0))
    inputs = {"response": args.response, "threshold": args.threshold, "gain": gain.K}
    stim = core.perceive_inverse(core.PerceptionBits(args.response), args.threshold, gain)
    return [_record("perceive-inverse", inputs, stim.magnitude, stim.unit)]


def cmd_integrate_ode(args, cfg, parser):
    inputs = {"threshold": args.threshold, "target": args.target, "k": args.k,
              "steps": args.steps, "spacing": args.spacing}
    result = core.integrate_weber_ode(args.threshold, args.target, args.k,
                                      args.steps, args.spacing)
    return [_record("integrate-ode", inputs, result.value, core.NATS)]


def cmd_information(args, cfg, parser):
    return [_record("information", {"prob": args.prob},
                    info.information(args.prob).value, core.BITS)]


def cmd_entropy(args, cfg, parser):
    try:
        probs = [float(p) for p in args.probs.split(",") if p.strip()]
    except ValueError:
        parser.error(f"--probs must be comma-separated numbers, got {args.probs!r}")
    dist = info.DiscreteDistribution(probs)
    return [_record("entropy", {"probs": args.probs},
                    info.shannon_entropy(dist).value, "bits/symbol")]


def cmd_sound_entropy(args, cfg, parser):
    thr = _require_thresholds(args, cfg, parser)
    inputs = {"freq": args.freq, "amp": args.amp,
              "freq_threshold": thr.f0, "amp_threshold": thr.a0}
    wave = _wave(args)
    if args.clamp and (args.freq < thr.f0 or args.amp < thr.a0):
        return [_record("sound-entropy", inputs, 0.0, sound.ENTROPY_UNIT,
                        below_threshold=True)]
    return [_record("sound-entropy", inputs, sound.haengjin_entropy(wave, thr).value,
                    sound.ENTROPY_UNIT)]


def cmd_sound_total(args, cfg, parser):
    thr = _require_thresholds(args, cfg, parser)
    inputs = {"freq": args.freq, "amp": args.amp,
              "freq_threshold": thr.f0, "amp_threshold": thr.a0}
    return [_record("sound-total", inputs, sound.total_perception(_wave(args), thr).value,
                    core.BITS)]


def cmd_energy_proxy(args, cfg, parser):
    return [_record("energy-proxy", {"freq": args.freq, "amp": args.amp},
                    sound.energy_proxy(_wave(args)), "(Hz*amp)^2")]


def cmd_rejected_form(args, cfg, parser):
    thr = _require_thresholds(args, cfg, parser)
    inputs = {"freq": args.freq, "amp": args.amp,
              "freq_threshold": thr.f0, "amp_threshold": thr.a0}
    return [_record("rejected-form", inputs,
                    sound.rejected_shannon_form(_wave(args), thr).value, core.BITS)]


def cmd_equivalent(args, cfg, parser):
    thr = _require_thresholds(args, cfg, parser)
    inputs = {"freq1": args.freq1, "amp1": args.amp1, "freq2": args.freq2,
              "amp2": args.amp2, "freq_threshold": thr.f0, "amp_threshold": thr.a0,
              "rel_tol": args.rel_tol}
    w1 = sound.SoundWave(args.freq1, args.amp1)
    w2 = sound.SoundWave(args.freq2, args.amp2)
    return [_record("equivalent", inputs,
                    sound.entropy_equivalent(w1, w2, thr, args.rel_tol), "boolean")]


def cmd_bel(args, cfg, parser):
    level = scales.intensity_level_bels(args.intensity)
    value, unit = (level.decibels, "dB") if args.decibels else (level.bels, "bels")
    return [_record("bel", {"intensity": args.intensity}, value, unit)]


def cmd_magnitude(args, cfg, parser):
    return [_record("magnitude", {"b1": args.b1, "b2": args.b2},
                    scales.magnitude_difference(args.b1, args.b2).value, "magnitudes")]


def cmd_pitch(args, cfg, parser):
    return [_record("pitch", {"freq": args.freq, "reference": args.reference},
                    scales.pitch_perception_bits(args.freq, args.reference).value,
                    core.BITS)]


def cmd_et_freq(args, cfg, parser):
    return [_record("et-freq", {"reference": args.reference, "semitones": args.semitones},
                    scales.equal_temperament_frequency(args.reference, args.semitones),
                    "Hz")]


def cmd_analyze_wav(args, cfg, parser):
    thr = _require_thresholds(args, cfg, parser)
    with open(args.path, "rb") as fh:
        buffer = audio.read_wav(fh.read())
    frames = audio.analyze_frames(buffer, args.window, args.hop)
    points = audio.entropy_series(frames, thr)
    records = []
    for frame, point in zip(frames, points):
        inputs = {"time": frame.start_time, "frequency": frame.dominant_frequency,
                  "amplitude": frame.amplitude}
        records.append(_record("analyze-wav", inputs, point.entropy, sound.ENTROPY_UNIT,
                               below_threshold=point.below_threshold))
    return records


# ---------------------------------------------------------------------------
# Parser construction


def _positive(text: str) -> float:
    value = float(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be a positive number, got {text}")
    return value


def build_parser() -> _Parser:
    parser = _Parser(prog="weber-bits",
                     description="Perceptual magnitudes in bits: log-ratio perception, "
                                 "information content, and sound-wave entropy.")
    parser.add_argument("--config", help="path to a `key = value` config file "
                        f"(also via ${CONFIG_ENV_VAR}, lowest precedence)")
    sub = parser.add_subparsers(dest="command", required=True, metavar="SUBCOMMAND")

    def add(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        p.add_argument("--format", choices=("json", "csv", "plain"), default="json")
        return p

    def add_thresholds(p):
        p.add_argument("--freq-threshold", type=_positive,
                       help="frequency threshold f0 in Hz (or config freq_threshold)")
        p.add_argument("--amp-threshold", type=_positive,
                       help="amplitude threshold a0 (or config amp_threshold)")

    p = add("perceive", cmd_perceive, "response K*log2(S/S0) to a stimulus")
    p.add_argument("--stimulus", type=_positive, required=True)
    p.add_argument("--threshold", type=_positive, required=True)
    p.add_argument("--gain", type=_positive)
    p.add_argument("--clamp", action="store_true",
                   help="map sub-threshold stimuli to 0 bits instead of erroring")

    p = add("perceive-inverse", cmd_perceive_inverse, "stimulus S0*2^(R/K) for a response")
    p.add_argument("--response", type=float, required=True, help="response in bits")
    p.add_argument("--threshold", type=_positive, required=True)
    p.add_argument("--gain", type=_positive)

    p = add("integrate-ode", cmd_integrate_ode,
            "numerically integrate dR = k*dS/S (result in nats)")
    p.add_argument("--threshold", type=_positive, required=True)
    p.add_argument("--target", type=_positive, required=True)
    p.add_argument("--k", type=_positive, default=1.0)
    p.add_argument("--steps", type=int, default=10_000)
    p.add_argument("--spacing", choices=("log", "linear"), default="log")

    p = add("information", cmd_information, "information content -log2(p) of an event")
    p.add_argument("--prob", type=float, required=True)

    p = add("entropy", cmd_entropy, "Shannon entropy of a probability vector")
    p.add_argument("--probs", required=True, help="comma-separated probabilities")

    for name, handler, help_text in (
        ("sound-entropy", cmd_sound_entropy, "mean perception log2(fa/f0a0)/2 of a wave"),
        ("sound-total", cmd_sound_total, "total perception log2(fa/f0a0) of a wave"),
        ("rejected-form", cmd_rejected_form,
         "entropy-style weighted sum (counterexample, not product-invariant)"),
    ):
        p = add(name, handler, help_text)
        p.add_argument("--freq", type=_positive, required=True)
        p.add_argument("--amp", type=_positive, required=True)
        add_thresholds(p)
        if name == "sound-entropy":
            p.add_argument("--clamp", action="store_true",
                           help="map sub-threshold waves to 0 instead of erroring")

    p = add("energy-proxy", cmd_energy_proxy, "relative energy (f*a)^2 of a wave")
    p.add_argument("--freq", type=_positive, required=True)
    p.add_argument("--amp", type=_positive, required=True)

    p = add("equivalent", cmd_equivalent, "whether two waves share one f*a product")
    p.add_argument("--freq1", type=_positive, required=True)
    p.add_argument("--amp1", type=_positive, required=True)
    p.add_argument("--freq2", type=_positive, required=True)
    p.add_argument("--amp2", type=_positive, required=True)
    p.add_argument("--rel-tol", type=_positive, default=1e-9)
    add_thresholds(p)

    p = add("bel", cmd_bel, "sound intensity level above 1e-12 W/m^2")
    p.add_argument("--intensity", type=_positive, required=True, help="intensity in W/m^2")
    p.add_argument("--decibels", action="store_true", help="report dB instead of bels")

    p = add("magnitude", cmd_magnitude, "stellar magnitude difference 2.5*log10(b1/b2)")
    p.add_argument("--b1", type=_positive, required=True)
    p.add_argument("--b2", type=_positive, required=True)

    p = add("pitch", cmd_pitch, "pitch perception log2(f/f_ref) in bits")
    p.add_argument("--freq", type=_positive, required=True)
    p.add_argument("--reference", type=_positive, required=True)

    p = add("et-freq", cmd_et_freq, "equal-temperament frequency ref*2^(semitones/12)")
    p.add_argument("--reference", type=_positive, required=True)
    p.add_argument("--semitones", type=float, required=True)

    p = add("analyze-wav", cmd_analyze_wav,
            "per-window (time, f, a, entropy) series from a PCM WAV file")
    p.add_argument("path", help="path to a 16-bit PCM WAV file")
    p.add_argument("--window", type=int, default=4096)
    p.add_argument("--hop", type=int, default=2048)
    add_thresholds(p)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    config_path = args.config or os.environ.get(CONFIG_ENV_VAR)
    try:
        cfg = load_config(config_path) if config_path else {}
    except (OSError, ConfigError) as exc:
        print(f"weber-bits: config error: {exc}", file=sys.stderr)
        return EXIT_IO

    try:
        records = args.handler(args, cfg, parser)
    except ValidationError as exc:
        print(f"weber-bits: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except DecodeError as exc:
        print(f"weber-bits: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"weber-bits: error: {exc}", file=sys.stderr)
        return EXIT_IO

    if records:
        emit(records, args.format, sys.stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
