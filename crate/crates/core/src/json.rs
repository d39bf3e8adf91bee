//! JSON output with fixed 17-significant-digit floats, so that reports are
//! byte-stable across platforms and runs.

use std::io;

use serde::Serialize;
use serde_json::ser::{Formatter, PrettyFormatter};

use crate::error::Result;

/// Pretty layout from `serde_json`, except that arrays nested in arrays (such
/// as `[re, im]` pairs) stay on one line. Floats are written as `{:.16e}`.
pub struct FixedFloatFormatter<'a> {
    inner: PrettyFormatter<'a>,
    /// `(is_array, compact)` per open container.
    stack: Vec<(bool, bool)>,
}

impl Default for FixedFloatFormatter<'_> {
    fn default() -> Self {
        FixedFloatFormatter {
            inner: PrettyFormatter::with_indent(b"  "),
            stack: Vec::new(),
        }
    }
}

impl FixedFloatFormatter<'_> {
    fn compact(&self) -> bool {
        self.stack.last().is_some_and(|&(_, compact)| compact)
    }
}

impl Formatter for FixedFloatFormatter<'_> {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        write!(writer, "{value:.16e}")
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, f64::from(value))
    }

    fn begin_array<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        let compact = self.stack.last().is_some_and(|&(is_array, compact)| is_array || compact);
        self.stack.push((true, compact));
        if compact {
            writer.write_all(b"[")
        } else {
            self.inner.begin_array(writer)
        }
    }

    fn end_array<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        let (_, compact) = self.stack.pop().expect("balanced arrays");
        if compact {
            writer.write_all(b"]")
        } else {
            self.inner.end_array(writer)
        }
    }

    fn begin_array_value<W: ?Sized + io::Write>(&mut self, writer: &mut W, first: bool) -> io::Result<()> {
        if self.compact() {
            if first {
                Ok(())
            } else {
                writer.write_all(b", ")
            }
        } else {
            self.inner.begin_array_value(writer, first)
        }
    }

    fn end_array_value<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        if self.compact() {
            Ok(())
        } else {
            self.inner.end_array_value(writer)
        }
    }

    fn begin_object<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        let compact = self.compact();
        self.stack.push((false, compact));
        if compact {
            writer.write_all(b"{")
        } else {
            self.inner.begin_object(writer)
        }
    }

    fn end_object<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        let (_, compact) = self.stack.pop().expect("balanced objects");
        if compact {
            writer.write_all(b"}")
        } else {
            self.inner.end_object(writer)
        }
    }

    fn begin_object_key<W: ?Sized + io::Write>(&mut self, writer: &mut W, first: bool) -> io::Result<()> {
        if self.compact() {
            if first {
                Ok(())
            } else {
                writer.write_all(b", ")
            }
        } else {
            self.inner.begin_object_key(writer, first)
        }
    }

    fn begin_object_value<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        if self.compact() {
            writer.write_all(b": ")
        } else {
            self.inner.begin_object_value(writer)
        }
    }

    fn end_object_value<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        if self.compact() {
            Ok(())
        } else {
            self.inner.end_object_value(writer)
        }
    }
}

pub fn to_string_fixed<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, FixedFloatFormatter::default());
    value.serialize(&mut ser)?;
    buf.push(b'\n');
    Ok(String::from_utf8(buf).expect("serde_json emits UTF-8"))
}
