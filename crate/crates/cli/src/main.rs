// Copyright 2026 The idealsync Authors
// SPDX-License-Identifier: Apache-2.0

use std::io::{stderr, stdout};
use std::process::ExitCode;

fn main() -> ExitCode {
    let status = idealsync_cli::run(std::env::args_os(), &mut stdout().lock(), &mut stderr().lock());
    ExitCode::from(u8::try_from(status).unwrap_or(1))
}
