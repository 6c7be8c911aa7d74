// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0
// Generated by gen_reduction.py; do not edit.
package app.ui;

import app.consts.*;

public class Panel00 {
  private final Widget widget;

  public Panel00(Widget widget) {
    this.widget = widget;
  }

  public void configure() {
    widget.retryCount(Retries.ASPEN_RETRY);
    widget.setLevel(Levels.BIRCH_LEVEL);
  }
}
