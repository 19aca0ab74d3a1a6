//! Scenario files: flat `key = value` text binding a waveform, processor,
//! complexity model, and optional channel into one analyzable unit.
//!
//! Recognized keys:
//!
//! ```text
//! name                    optional; defaults to the file stem
//! waveform.n              subcarrier count, integer >= 1
//! waveform.delta_f_hz     subcarrier spacing in Hz
//! waveform.m              constellation order, power of two >= 2
//! processor.instr_per_s   processor rate in instructions per second
//! complexity.model        catalog name (dft_naive, fft_radix2, ...)
//! complexity.linear_c     coefficient for dft_linear_conjecture only
//! channel.power_w         received power in W        (both channel keys
//! channel.n0_w_per_hz     noise density in W/Hz       or neither)
//! ```
//!
//! `#` starts a comment. Unknown and duplicate keys are hard errors so a
//! typo cannot silently change an analysis. [`Scenario::dump`] emits a
//! canonical form that parses back to an identical scenario.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::metrics::{full_report, ScReport};
use crate::waveform::{BasebandProcessor, ChannelModel, ComplexityModel, WaveformModel};

/// One fully validated analysis input.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub name: String,
    pub waveform: WaveformModel,
    pub processor: BasebandProcessor,
    pub complexity: ComplexityModel,
    pub channel: Option<ChannelModel>,
}

const KNOWN_KEYS: [&str; 9] = [
    "name",
    "waveform.n",
    "waveform.delta_f_hz",
    "waveform.m",
    "processor.instr_per_s",
    "complexity.model",
    "complexity.linear_c",
    "channel.power_w",
    "channel.n0_w_per_hz",
];

#[derive(Default)]
struct RawScenario {
    entries: Vec<(String, String)>,
}

impl RawScenario {
    fn parse(text: &str) -> Result<Self> {
        let mut raw = RawScenario::default();
        for (lineno, line) in text.lines().enumerate() {
            let line = match line.find('#') {
                Some(pos) => &line[..pos],
                None => line,
            };
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Parse(format!(
                    "line {}: expected `key = value`, got `{line}`",
                    lineno + 1
                ))
            })?;
            let key = key.trim();
            let value = value.trim();
            if !KNOWN_KEYS.contains(&key) {
                return Err(Error::UnknownKey(key.to_string()));
            }
            if raw.entries.iter().any(|(k, _)| k == key) {
                return Err(Error::DuplicateKey(key.to_string()));
            }
            if value.is_empty() {
                return Err(Error::InvalidValue {
                    key: key.to_string(),
                    reason: "empty value".into(),
                });
            }
            raw.entries.push((key.to_string(), value.to_string()));
        }
        Ok(raw)
    }

    fn get(&self, key: &str) -> Option<&str> {
        self.entries
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    fn require(&self, key: &str) -> Result<&str> {
        self.get(key).ok_or_else(|| Error::MissingKey(key.into()))
    }

    fn parse_u64(&self, key: &str) -> Result<u64> {
        let v = self.require(key)?;
        v.parse().map_err(|_| Error::InvalidValue {
            key: key.to_string(),
            reason: format!("expected an unsigned integer, got `{v}`"),
        })
    }

    fn parse_f64(&self, key: &str) -> Result<f64> {
        let v = self.require(key)?;
        v.parse().map_err(|_| Error::InvalidValue {
            key: key.to_string(),
            reason: format!("expected a number, got `{v}`"),
        })
    }

    fn parse_f64_opt(&self, key: &str) -> Result<Option<f64>> {
        match self.get(key) {
            None => Ok(None),
            Some(_) => self.parse_f64(key).map(Some),
        }
    }
}

impl Scenario {
    /// Parse scenario text; `default_name` applies when no `name` key is
    /// present (callers pass the file stem).
    pub fn parse_str(text: &str, default_name: &str) -> Result<Self> {
        let raw = RawScenario::parse(text)?;

        let name = raw.get("name").unwrap_or(default_name).to_string();
        let waveform = WaveformModel::new(
            &name,
            raw.parse_u64("waveform.n")?,
            raw.parse_f64("waveform.delta_f_hz")?,
            raw.parse_u64("waveform.m")?,
        )?;
        let processor = BasebandProcessor::new(raw.parse_f64("processor.instr_per_s")?)?;

        let linear_c = raw.parse_f64_opt("complexity.linear_c")?;
        let complexity = ComplexityModel::by_name(raw.require("complexity.model")?, linear_c)?;
        // surfaces e.g. a non-power-of-two N under fft_radix2 at load time
        complexity.instruction_count(waveform.n_subcarriers())?;

        let power = raw.parse_f64_opt("channel.power_w")?;
        let n0 = raw.parse_f64_opt("channel.n0_w_per_hz")?;
        let channel = match (power, n0) {
            (Some(p), Some(n0)) => Some(ChannelModel::new(waveform.bandwidth_hz(), p, n0)?),
            (None, None) => None,
            (Some(_), None) => return Err(Error::MissingKey("channel.n0_w_per_hz".into())),
            (None, Some(_)) => return Err(Error::MissingKey("channel.power_w".into())),
        };

        Ok(Scenario {
            name,
            waveform,
            processor,
            complexity,
            channel,
        })
    }

    /// Load a scenario file; the file stem is the default name.
    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)?;
        let stem = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "scenario".to_string());
        Self::parse_str(&text, &stem)
    }

    /// Canonical text form; parsing it back yields an identical scenario.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("name = {}\n", self.name));
        out.push_str(&format!("waveform.n = {}\n", self.waveform.n_subcarriers()));
        out.push_str(&format!(
            "waveform.delta_f_hz = {}\n",
            self.waveform.subcarrier_spacing_hz()
        ));
        out.push_str(&format!(
            "waveform.m = {}\n",
            self.waveform.constellation_order()
        ));
        out.push_str(&format!(
            "processor.instr_per_s = {}\n",
            self.processor.instr_per_s()
        ));
        out.push_str(&format!("complexity.model = {}\n", self.complexity.name()));
        if let crate::waveform::ComplexityKind::LinearConjecture(c) = self.complexity.kind() {
            out.push_str(&format!("complexity.linear_c = {c}\n"));
        }
        if let Some(ch) = &self.channel {
            out.push_str(&format!("channel.power_w = {}\n", ch.rx_power_w()));
            out.push_str(&format!(
                "channel.n0_w_per_hz = {}\n",
                ch.noise_psd_w_per_hz()
            ));
        }
        out
    }

    /// Compute the full metric report for this scenario.
    pub fn report(&self) -> Result<ScReport> {
        full_report(
            &self.waveform,
            self.channel.as_ref(),
            &self.processor,
            &self.complexity,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    const WIFI_AC: &str = "\
# 512-subcarrier waveform on a 1440 instr/us processor
name = 80211ac
waveform.n = 512
waveform.delta_f_hz = 312500
waveform.m = 2
processor.instr_per_s = 1440000000
complexity.model = fft_radix2
";

    #[test]
    fn parses_wifi_ac() {
        let s = Scenario::parse_str(WIFI_AC, "fallback").unwrap();
        assert_eq!(s.name, "80211ac");
        assert_eq!(s.waveform.n_subcarriers(), 512);
        assert_eq!(s.complexity.name(), "fft_radix2");
        assert!(s.channel.is_none());
        let r = s.report().unwrap();
        assert_relative_eq!(r.sc_throughput_bps, 8.0e7, max_relative = 1e-12);
    }

    #[test]
    fn name_defaults_to_stem() {
        let text = WIFI_AC.replace("name = 80211ac\n", "");
        let s = Scenario::parse_str(&text, "mystem").unwrap();
        assert_eq!(s.name, "mystem");
    }

    #[test]
    fn unknown_key_is_fatal() {
        let text = WIFI_AC.replace("waveform.n =", "waveform.nn =");
        match Scenario::parse_str(&text, "x") {
            Err(Error::UnknownKey(k)) => assert_eq!(k, "waveform.nn"),
            other => panic!("expected unknown key error, got {other:?}"),
        }
    }

    #[test]
    fn duplicate_key_is_fatal() {
        let text = format!("{WIFI_AC}waveform.n = 64\n");
        assert!(matches!(
            Scenario::parse_str(&text, "x"),
            Err(Error::DuplicateKey(_))
        ));
    }

    #[test]
    fn missing_key_is_fatal() {
        let text = WIFI_AC.replace("processor.instr_per_s = 1440000000\n", "");
        match Scenario::parse_str(&text, "x") {
            Err(Error::MissingKey(k)) => assert_eq!(k, "processor.instr_per_s"),
            other => panic!("expected missing key error, got {other:?}"),
        }
    }

    #[test]
    fn bad_value_names_the_key() {
        let text = WIFI_AC.replace("waveform.n = 512", "waveform.n = twelve");
        match Scenario::parse_str(&text, "x") {
            Err(Error::InvalidValue { key, .. }) => assert_eq!(key, "waveform.n"),
            other => panic!("expected invalid value error, got {other:?}"),
        }
    }

    #[test]
    fn linear_c_requires_linear_model() {
        let text = format!("{WIFI_AC}complexity.linear_c = 2\n");
        assert!(Scenario::parse_str(&text, "x").is_err());

        let text = WIFI_AC
            .replace(
                "complexity.model = fft_radix2",
                "complexity.model = dft_linear_conjecture",
            )
            + "complexity.linear_c = 2.5\n";
        let s = Scenario::parse_str(&text, "x").unwrap();
        assert_eq!(s.complexity.instruction_count(2).unwrap(), 5.0);
    }

    #[test]
    fn fft_model_rejects_non_power_of_two_n() {
        let text = WIFI_AC.replace("waveform.n = 512", "waveform.n = 100");
        assert!(matches!(
            Scenario::parse_str(&text, "x"),
            Err(Error::NotPowerOfTwo(100))
        ));
    }

    #[test]
    fn channel_keys_come_in_pairs() {
        let text = format!("{WIFI_AC}channel.power_w = 2\n");
        assert!(matches!(
            Scenario::parse_str(&text, "x"),
            Err(Error::MissingKey(_))
        ));

        let text = format!("{WIFI_AC}channel.power_w = 160\nchannel.n0_w_per_hz = 1e-6\n");
        let s = Scenario::parse_str(&text, "x").unwrap();
        let ch = s.channel.unwrap();
        assert_eq!(ch.bandwidth_hz(), 1.6e8);
        // snr = 160 / (1.6e8 * 1e-6) = 1
        assert_eq!(ch.snr(), 1.0);
    }

    #[test]
    fn dump_round_trips() {
        let text = format!("{WIFI_AC}channel.power_w = 160\nchannel.n0_w_per_hz = 1e-6\n");
        let s = Scenario::parse_str(&text, "x").unwrap();
        let dumped = s.dump();
        let reparsed = Scenario::parse_str(&dumped, "x").unwrap();
        assert_eq!(reparsed, s);
        // canonical form is a fixed point
        assert_eq!(reparsed.dump(), dumped);
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = format!("\n  # full-line comment\n{WIFI_AC}\n# trailing\n");
        let s = Scenario::parse_str(&text, "x").unwrap();
        assert_eq!(s.name, "80211ac");
    }
}
