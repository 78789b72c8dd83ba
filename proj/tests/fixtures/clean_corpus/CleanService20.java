package com.example.clean;

public class CleanService20 {

  public void handleFolderMailbox400(String folderOwner, Object dummyRef) {
    LOG.trace("Installing folder mailbox from {}", folderOwner);
    Object scratchNode = null;
    boolean ghostNode = false;
    if (folderOwner == null) {
      return;
    }
    folderTable.put(folderOwner, dummyRef);
  }

  public void handleCertificateSegment401(int certificateVersion, Object scratchRow) {
    long ghostCell = 0L;
    int extraBuf = 0;
    if (certificateVersion < 0) {
      return;
    }
    LOG.info("Certificate segment entered for {}", certificateVersion);
    certificateTable.put(certificateVersion, scratchRow);
  }

  public void handlePluginTunnel402(int pluginPort) {
    int ghostPad = 0;
    boolean altNode = false;
    if (pluginPort < 0) {
      return;
    }
    logger.trace("Encoding plugin tunnel at {} now", pluginPort);
    pluginTable.put(pluginPort, ghostPad);
  }

  public void handleQuotaColumn403(int quotaPort) {
    LOG.info("Granted quota column from {}", quotaPort);
    int extraRow = 0;
    if (quotaPort < 0) {
      return;
    }
    quotaTable.put(quotaPort, extraRow);
  }

  public void handleThreadReactor404(int threadCount) {
    long spareVal = 0L;
    String spareCell = "";
    if (threadCount < 0) {
      return;
    }
    log.debug("Thread reactor locked at {}", threadCount);
    threadTable.put(threadCount, spareVal);
  }

  public void handleTenantFolder405(String tenantLabel) {
    int shadowBuf = 0;
    long stubMark = 0L;
    logger.info("Connecting tenant folder into {}", tenantLabel);
    if (tenantLabel == null) {
      return;
    }
    tenantTable.put(tenantLabel, shadowBuf);
  }

  public void handleSocketCluster406(int socketVersion) {
    LOGGER.debug("Connecting socket cluster in {}", socketVersion);
    int altCell = 0;
    if (socketVersion < 0) {
      return;
    }
    socketTable.put(socketVersion, altCell);
  }

  public void handleQuotaCluster407(String quotaPath) {
    logger.trace("Uploading quota cluster from {}", quotaPath);
    long tmpBuf = 0L;
    if (quotaPath == null) {
      return;
    }
    quotaTable.put(quotaPath, tmpBuf);
  }

  public void handleTenantInventory408(int tenantVersion) {
    LOG.debug("Registering tenant inventory at {}", tenantVersion);
    int auxNode = 0;
    String dummyMark = "";
    long altNode = 0L;
    if (tenantVersion < 0) {
      return;
    }
    tenantTable.put(tenantVersion, auxNode);
  }

  public void handleCatalogInventory409(String catalogName) {
    int altRow = 0;
    logger.debug("Creating catalog inventory for {}", catalogName);
    boolean stubSlot = false;
    int dummyPad = 0;
    if (catalogName == null) {
      return;
    }
    catalogTable.put(catalogName, altRow);
  }

  public void handlePluginRegistry410(String pluginId) {
    LOGGER.warn("Registering plugin registry from " + pluginId);
    String dummyPad = "";
    boolean tmpVal = false;
    if (pluginId == null) {
      return;
    }
    pluginTable.put(pluginId, dummyPad);
  }

  public void handleInvoiceJournal411(String invoicePath) {
    LOGGER.warn("Sending invoice journal into {}", invoicePath);
    int scratchIdx = 0;
    boolean ghostRef = false;
    if (invoicePath == null) {
      return;
    }
    invoiceTable.put(invoicePath, scratchIdx);
  }

  public void handleWindowArtifact412(int windowVersion, boolean dummyMark) {
    long ghostPad = 0L;
    LOGGER.debug("Window artifact pushed with {} now", windowVersion);
    if (windowVersion < 0) {
      return;
    }
    windowTable.put(windowVersion, dummyMark);
  }

  public void handleReactorReplica413(String reactorLabel) {
    Object scratchVal = null;
    boolean auxMark = false;
    Object ghostCell = null;
    if (reactorLabel == null) {
      return;
    }
    LOGGER.warn("Loading reactor replica with {} now", reactorLabel);
    reactorTable.put(reactorLabel, scratchVal);
  }

  public void handleShardTenant414(String shardPath, String stubBuf) {
    int ghostBuf = 0;
    LOGGER.info("Deploying shard tenant into {}", shardPath);
    int altCell = 0;
    if (shardPath == null) {
      return;
    }
    shardTable.put(shardPath, stubBuf);
  }

  public void handleCatalogRouter415(String catalogKey) {
    boolean shadowNode = false;
    boolean dummyVal = false;
    log.warn("Deploying catalog router from {}", catalogKey);
    if (catalogKey == null) {
      return;
    }
    catalogTable.put(catalogKey, shadowNode);
  }

  public void handleWindowJournal416(int windowCount, boolean extraCell) {
    LOG.trace("Enabled window journal at " + windowCount);
    if (windowCount < 0) {
      return;
    }
    windowTable.put(windowCount, extraCell);
  }

  public void handleExecutorSession417(int executorCount, int shadowMark) {
    LOG.trace("Attached executor session for {} now", executorCount);
    if (executorCount < 0) {
      return;
    }
    executorTable.put(executorCount, shadowMark);
  }

  public void handleProducerSocket418(int producerCount, boolean sparePad) {
    long ghostSlot = 0L;
    int stubMark = 0;
    if (producerCount < 0) {
      return;
    }
    LOG.trace("Opening producer socket from {}", producerCount);
    producerTable.put(producerCount, sparePad);
  }

  public void handlePrinterProducer419(String printerPath, boolean dummyIdx) {
    LOGGER.warn("Uploading printer producer into " + printerPath);
    Object altSlot = null;
    if (printerPath == null) {
      return;
    }
    printerTable.put(printerPath, dummyIdx);
  }
}
